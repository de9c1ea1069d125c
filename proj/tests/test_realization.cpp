#include <catch2/catch_amalgamated.hpp>

#include "kanloop/realization.hpp"
#include "oracles.hpp"

using namespace kanloop;

TEST_CASE("simplex grids") {
    SimplexGrid g(2, 4);
    CHECK(g.size() == 15);  // C(4+2, 2)
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(g.index(g.points[i]) == static_cast<int>(i));
    SimplexGrid g3(3, 8);
    CHECK(g3.size() == 165);
    CHECK_THROWS_AS(g.index(GridPoint{5, 5}), ValidationError);

    // codegeneracy and coface images stay on the grid
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        const GridPoint& p = g3.points[std::uniform_int_distribution<std::size_t>(
            0, g3.size() - 1)(rng)];
        auto b = to_barycentric(p, 8);
        for (int j = 0; j <= 2; ++j)
            CHECK_NOTHROW(SimplexGrid(2, 8).index(from_barycentric(codegeneracy_barycentric(j, b))));
        for (int j = 0; j <= 4; ++j)
            CHECK_NOTHROW(SimplexGrid(4, 8).index(from_barycentric(coface_barycentric(j, b))));
    }
}

TEST_CASE("eta maps merge the right coordinates") {
    // eta^0 (t0,t1,t2) = (t0+t1, t2) and eta^1 (t0,t1,t2) = (t0, t1+t2)
    int m = 12;
    GridPoint p{3, 4};  // t1 = 3/12, t2 = 4/12, t0 = 5/12
    auto [e0, e1] = eta_maps(p, m);
    CHECK(e0 == GridPoint{4});  // independent coordinate t2
    CHECK(e1 == GridPoint{7});  // independent coordinate t1 + t2
}

TEST_CASE("surface points validate and perturbations are caught") {
    std::mt19937_64 rng(109);
    for (Group grp : {Group::U1, Group::SU2}) {
        GroupSpec spec{grp, 1e-9};
        FreeSimplicialGroup k = kan_group(surface(1));
        std::vector<GroupElement> w{random_element(spec, rng), random_element(spec, rng)};
        auto phi = oracles::fibre_path(spec, w, 0, 32, rng);
        RealizationPoint p = make_surface_point(k, spec, w, phi);
        ValidationReport rep = validate_point(k, p, spec);
        CHECK(rep.pass());
        CHECK(rep.max_violation() < 1e-12);

        // perturb the recursion-pinned end (t = 0)
        RealizationPoint bad = p;
        double delta = 1e-3;
        bad.values[1][0][0] =
            mul(bad.values[1][0][0], exp_alg(grp, alg_scale(delta, random_unit_alg(grp, rng))));
        ValidationReport rep2 = validate_point(k, bad, spec);
        CHECK_FALSE(rep2.pass());
        CHECK(rep2.max_violation() > delta / 2);
        CHECK(rep2.max_violation() < 2 * delta);

        // perturb the boundary-pinned end (t = 1)
        RealizationPoint bad2 = p;
        bad2.values[1].back()[0] =
            mul(bad2.values[1].back()[0], exp_alg(grp, alg_scale(delta, random_unit_alg(grp, rng))));
        CHECK_FALSE(validate_point(k, bad2, spec).pass());
    }
}

TEST_CASE("sphere, spine and 4-complex points validate") {
    std::mt19937_64 rng(113);
    GroupSpec spec{Group::SU2, 1e-9};

    for (int q : {2, 3}) {
        FreeSimplicialGroup k = kan_group(sphere(q));
        Alg dir = random_unit_alg(rng);
        RealizationPoint p =
            make_sphere_point(k, spec, 8, [dir](const std::vector<double>&) { return dir; });
        CHECK(validate_point(k, p, spec).pass());
    }

    FreeSimplicialGroup spine = kan_group(oracles::rp3like_complex());
    RealizationPoint sp =
        make_spine_point(spine, spec, {random_element(spec, rng)}, 16, rng);
    CHECK(validate_point(spine, sp, spec).pass());

    FreeSimplicialGroup four = kan_group(four_complex(1, word_of(GenRef{"v1", 2, {}})));
    RealizationPoint fp = make_four_point(four, spec, oracles::random_based_loop(spec, 1, 8, rng));
    CHECK(validate_point(four, fp, spec).pass());

    // ten random points across all families
    for (int trial = 0; trial < 10; ++trial) {
        auto [k, p] = oracles::random_point(spec, 8, rng);
        CHECK(validate_point(k, p, spec).pass());
    }
}

TEST_CASE("coface recursion equals the word-map value on a surface") {
    std::mt19937_64 rng(127);
    GroupSpec spec{Group::SU2, 1e-9};
    FreeSimplicialGroup k = kan_group(surface(2));
    std::vector<GroupElement> w;
    for (int j = 0; j < 4; ++j) w.push_back(random_element(spec, rng));
    auto phi = oracles::fibre_path(spec, w, 0, 16, rng);
    RealizationPoint p = make_surface_point(k, spec, w, phi);
    auto forced = coface_last(k, p, spec, 1);
    REQUIRE(forced.size() == 1);  // grid of the 0-simplex
    CHECK(distance(forced[0][0], relator_value(w, spec)) < 1e-12);
}

TEST_CASE("primitive decomposition round-trips") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 100; ++trial) {
        FreeSimplicialGroup k = oracles::random_fixture_group(rng);
        GroupSpec spec{trial % 2 ? Group::U1 : Group::SU2, 1e-9};
        int q = std::uniform_int_distribution<int>(0, 3)(rng);
        HomPoint hom;
        for (const GenRef& g : enumerate_generators(k, q)) hom[g] = random_element(spec, rng);
        PrimitiveCoords coords = primitive_decompose(k, q, hom);
        CHECK(primitive_recompose(k, q, coords) == hom);
        // block count: one per degeneracy prefix that occurs
        if (q == 0 && !hom.empty()) CHECK(coords.size() == 1);
    }
}

TEST_CASE("pushforward is functorial and matches the coface recursion") {
    std::mt19937_64 rng(137);
    GroupSpec spec{Group::SU2, 1e-9};
    FreeSimplicialGroup k = kan_group(surface(1));

    HomPoint phi;
    for (const GenRef& g : enumerate_generators(k, 0)) phi[g] = random_element(spec, rng);
    CHECK(pushforward(k, MonotoneMap::identity(0), phi, spec) == phi);

    // last coface: the relator slot receives the attaching-word value
    HomPoint up = pushforward(k, MonotoneMap::coface(1, 1), phi, spec);
    GroupElement direct = eval_word(k.attaching("r"), phi, spec);
    CHECK(up.at(k.gen("r")) == direct);  // identical evaluation path

    int checked = 0;
    while (checked < 50) {
        MonotoneMap inner = oracles::random_monotone(rng, 3);
        MonotoneMap outer = oracles::random_monotone(rng, 3);
        if (inner.target != outer.source) continue;
        ++checked;
        HomPoint base;
        for (const GenRef& g : enumerate_generators(k, inner.source))
            base[g] = random_element(spec, rng);
        HomPoint via_two = pushforward(k, outer, pushforward(k, inner, base, spec), spec);
        HomPoint direct2 = pushforward(k, compose(outer, inner), base, spec);
        REQUIRE(via_two.size() == direct2.size());
        for (const auto& [g, v] : direct2) CHECK(distance(v, via_two.at(g)) < 1e-12);
    }
}

TEST_CASE("component classification over u1 and su2") {
    std::mt19937_64 rng(139);
    GroupSpec u1{Group::U1, 1e-9};
    for (int n = -2; n <= 2; ++n) {
        std::vector<GroupElement> w{random_element(u1, rng), random_element(u1, rng)};
        auto phi = oracles::fibre_path(u1, w, n, 64, rng);
        CHECK(classify_component(w, phi, u1) == n);
        CHECK(classify_component(w, phi, u1, PathStrategy::GeodesicThenConstant) == n);
    }
    GroupSpec su2{Group::SU2, 1e-9};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<GroupElement> w{random_element(su2, rng), random_element(su2, rng)};
        auto phi = oracles::fibre_path(su2, w, 0, 64, rng);
        CHECK(classify_component(w, phi, su2) == 0);
    }
    // u1 classes add under pointwise loop multiplication
    std::vector<GroupElement> w{random_element(u1, rng), random_element(u1, rng)};
    auto phi = oracles::fibre_path(u1, w, 1, 64, rng);
    std::vector<GroupElement> boosted = phi;
    for (std::size_t k = 0; k < boosted.size(); ++k)
        boosted[k] = mul(exp_alg(Group::U1, {2 * M_PI * 2 * static_cast<double>(k) / 64.0, 0, 0}),
                         boosted[k]);
    CHECK(classify_component(w, boosted, u1) == 3);

    // endpoint mismatch is rejected
    auto broken = phi;
    broken.back() = mul(broken.back(), exp_alg(Group::U1, {0.5, 0, 0}));
    CHECK_THROWS_AS(classify_component(w, broken, u1), NumericError);
}

TEST_CASE("tau vanishes on the boundary and is trivial for u1") {
    std::mt19937_64 rng(149);
    Word v1 = word_of(GenRef{"v1", 2, {}});
    GroupSpec su2{Group::SU2, 1e-9};
    int m = 24;
    auto phi = oracles::random_based_loop(su2, 1, m, rng);
    auto samples = tau(phi, v1, su2);
    SimplexGrid g(2, m);
    GroupElement e = GroupElement::identity(Group::SU2);
    double worst_boundary = 0;
    double worst_any = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool boundary = false;
        for (int j = 0; j <= 2; ++j) boundary = boundary || on_face(g.points[i], m, j);
        double d = distance(e, samples[i]);
        if (boundary) worst_boundary = std::max(worst_boundary, d);
        worst_any = std::max(worst_any, d);
    }
    CHECK(worst_boundary < 1e-12);
    CHECK(worst_any > 1e-3);  // interior is genuinely nontrivial

    // constant loop gives the constant identity
    std::vector<std::vector<GroupElement>> constant(
        static_cast<std::size_t>(m) + 1, {GroupElement::identity(Group::SU2)});
    for (const GroupElement& s : tau(constant, v1, su2))
        CHECK(distance(e, s) < 1e-14);

    // u1 is abelian: tau is identically one
    GroupSpec u1{Group::U1, 1e-9};
    auto phi_u1 = oracles::random_based_loop(u1, 1, m, rng);
    for (const GroupElement& s : tau(phi_u1, v1, u1))
        CHECK(distance(GroupElement::identity(Group::U1), s) < 1e-12);
}

TEST_CASE("tau agrees with the forced top layer of a 4-complex point") {
    std::mt19937_64 rng(229);
    GroupSpec spec{Group::SU2, 1e-9};
    Word gamma = multiply(word_of(GenRef{"v1", 2, {}}), word_of(GenRef{"w1_2", 2, {}}));
    FreeSimplicialGroup k = kan_group(four_complex(2, gamma));
    int m = 10;
    RealizationPoint p = make_four_point(k, spec, oracles::random_based_loop(spec, 2, m, rng));
    std::vector<std::vector<GroupElement>> phi1;
    for (const auto& tuple : p.values[1]) phi1.push_back(tuple);
    auto samples = tau(phi1, gamma, spec);
    SimplexGrid g2(2, m), g3(3, m);
    for (std::size_t i = 0; i < g2.size(); ++i) {
        GridPoint q3 = g2.points[i];
        q3.push_back(0);  // the last face of the 3-simplex
        CHECK(distance(samples[i],
                       p.values[3][static_cast<std::size_t>(g3.index(q3))][0]) < 1e-13);
    }
}

TEST_CASE("multi-relator spine points validate") {
    std::mt19937_64 rng(233);
    GroupSpec spec{Group::SU2, 1e-9};
    for (int trial = 0; trial < 10; ++trial) {
        ReducedCWComplex y = oracles::random_spine(rng);
        FreeSimplicialGroup k = kan_group(y);
        std::vector<GroupElement> w;
        for (std::size_t j = 0; j < k.nondegen[0].size(); ++j)
            w.push_back(random_element(spec, rng));
        RealizationPoint p = make_spine_point(k, spec, w, 12, rng);
        CHECK(validate_point(k, p, spec).pass());
    }
}

TEST_CASE("malformed points are rejected structurally") {
    std::mt19937_64 rng(151);
    GroupSpec spec{Group::SU2, 1e-9};
    FreeSimplicialGroup k = kan_group(surface(1));
    std::vector<GroupElement> w{random_element(spec, rng), random_element(spec, rng)};
    RealizationPoint p = make_surface_point(k, spec, w, oracles::fibre_path(spec, w, 0, 8, rng));
    RealizationPoint wrong = p;
    wrong.values[1].pop_back();
    CHECK_THROWS_AS(validate_point(k, wrong, spec), ValidationError);
    RealizationPoint wrong2 = p;
    wrong2.values[0][0].pop_back();
    CHECK_THROWS_AS(validate_point(k, wrong2, spec), ValidationError);
}
