#include <catch2/catch_amalgamated.hpp>

#include "kanloop/energy.hpp"
#include "oracles.hpp"

using namespace kanloop;

namespace {

std::vector<GroupElement> u1_winding_loop(int n, int m) {
    std::vector<GroupElement> loop;
    for (int k = 0; k <= m; ++k)
        loop.push_back(exp_alg(Group::U1, {2 * M_PI * n * k / static_cast<double>(m), 0, 0}));
    return loop;
}

}  // namespace

TEST_CASE("energy basics") {
    GroupSpec u1{Group::U1, 1e-9};
    std::vector<GroupElement> constant(33, GroupElement::identity(Group::U1));
    CHECK(path_energy(constant, u1) == 0.0);

    // uniform winding loop: discrete energy equals the closed form exactly
    for (int n : {1, 2, 3})
        CHECK(path_energy(u1_winding_loop(n, 256), u1) ==
              Catch::Approx(4 * M_PI * M_PI * n * n).epsilon(1e-10));

    // running the same loop at double speed on half the interval costs more
    int m = 256;
    std::vector<GroupElement> rushed;
    for (int k = 0; k <= m; ++k) {
        double t = static_cast<double>(k) / m;
        double s = std::min(2.0 * t, 1.0);
        rushed.push_back(exp_alg(Group::U1, {2 * M_PI * s, 0, 0}));
    }
    CHECK(path_energy(rushed, u1) > path_energy(u1_winding_loop(1, m), u1) * 1.9);

    std::vector<GroupElement> coarse{GroupElement::identity(Group::U1),
                                     exp_alg(Group::U1, {3.0, 0, 0})};
    CHECK_THROWS_AS(path_energy(coarse, u1), NumericError);
}

TEST_CASE("energy is left-translation invariant") {
    std::mt19937_64 rng(157);
    GroupSpec spec{Group::SU2, 1e-9};
    std::vector<GroupElement> w{random_element(spec, rng), random_element(spec, rng)};
    auto phi = oracles::fibre_path(spec, w, 0, 32, rng);
    GroupElement g = random_element(spec, rng);
    std::vector<GroupElement> shifted;
    for (const auto& s : phi) shifted.push_back(mul(g, s));
    CHECK(path_energy(shifted, spec) == Catch::Approx(path_energy(phi, spec)).epsilon(1e-10));
}

TEST_CASE("a discrete geodesic is a critical point") {
    std::mt19937_64 rng(163);
    GroupSpec spec{Group::SU2, 1e-9};
    std::vector<GroupElement> w{random_element(spec, rng), random_element(spec, rng)};
    GroupElement target = relator_value(w, spec);
    std::vector<GroupElement> geo = geodesic_path(target, spec, 64);
    FlowConfig cfg;
    cfg.steps = 5;
    DescentResult r = descend(w, geo, cfg, spec);
    REQUIRE_FALSE(r.trace.empty());
    CHECK(r.trace.front().grad_norm < 1e-6);
    CHECK(r.steps_taken <= 1);
}

TEST_CASE("u1 winding loops descend to the geodesic energy") {
    std::mt19937_64 rng(167);
    GroupSpec u1{Group::U1, 1e-9};
    std::vector<GroupElement> w{random_element(u1, rng), random_element(u1, rng)};
    auto phi = oracles::fibre_path(u1, w, 2, 64, rng, 0.5);
    FlowConfig cfg;
    cfg.steps = 4000;
    cfg.step_size = 4.0;
    cfg.stop_grad_norm = 1e-7;
    DescentResult r = descend(w, phi, cfg, u1);
    double target = 4 * M_PI * M_PI * 4;
    CHECK(r.final_energy == Catch::Approx(target).epsilon(0.01));
    CHECK(r.class_before == 2);
    CHECK(r.class_after == 2);
    for (std::size_t i = 1; i < r.trace.size(); ++i)
        CHECK(r.trace[i].energy <= r.trace[i - 1].energy);
}

TEST_CASE("su2 wiggly paths descend to the squared geodesic distance") {
    std::mt19937_64 rng(173);
    GroupSpec spec{Group::SU2, 1e-9};
    std::vector<GroupElement> w{random_element(spec, rng), random_element(spec, rng)};
    GroupElement target = relator_value(w, spec);
    auto phi = oracles::fibre_path(spec, w, 0, 64, rng, 0.5);
    FlowConfig cfg;
    cfg.steps = 4000;
    cfg.step_size = 4.0;
    cfg.stop_grad_norm = 1e-7;
    DescentResult r = descend(w, phi, cfg, spec);
    double d = alg_norm(log_group(target));
    CHECK(r.final_energy == Catch::Approx(d * d).epsilon(0.01));
    CHECK(r.class_before == 0);
    CHECK(r.class_after == 0);
}

TEST_CASE("joint mode lowers the energy and matches finite differences") {
    std::mt19937_64 rng(179);
    GroupSpec spec{Group::SU2, 1e-9};
    std::vector<GroupElement> w{random_element(spec, rng), random_element(spec, rng)};
    auto phi = oracles::fibre_path(spec, w, 0, 24, rng, 0.4);

    // finite-difference check of the holonomy gradient
    Word relator = kanloop::detail::surface_relator_word(w.size());
    auto grad = kanloop::detail::holonomy_gradient(relator, w, phi, spec);
    int m = static_cast<int>(phi.size()) - 1;
    auto endpoint_term = [&](const std::vector<GroupElement>& hol) {
        Alg l = log_step(phi[static_cast<std::size_t>(m) - 1], relator_value(hol, spec));
        return m * alg_dot(l, l);
    };
    double h = 1e-6;
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (const Alg& dir :
             {Alg{1, 0, 0}, Alg{0, 1, 0}, Alg{0, 0, 1}}) {
            std::vector<GroupElement> plus = w, minus = w;
            plus[j] = mul(w[j], exp_alg(spec.group, alg_scale(h, dir)));
            minus[j] = mul(w[j], exp_alg(spec.group, alg_scale(-h, dir)));
            double fd = (endpoint_term(plus) - endpoint_term(minus)) / (2 * h);
            CHECK(fd == Catch::Approx(alg_dot(grad[j], dir)).margin(1e-4));
        }
    }

    FlowConfig cfg;
    cfg.mode = FlowConfig::Mode::Joint;
    cfg.steps = 400;
    cfg.step_size = 1.0;
    DescentResult r = descend(w, phi, cfg, spec);
    CHECK(r.final_energy < path_energy(phi, spec));
    CHECK(distance(r.path.back(), relator_value(r.holonomies, spec)) < 1e-9);
}

TEST_CASE("endpoint mismatch is rejected") {
    std::mt19937_64 rng(181);
    GroupSpec spec{Group::SU2, 1e-9};
    std::vector<GroupElement> w{random_element(spec, rng), random_element(spec, rng)};
    auto phi = oracles::fibre_path(spec, w, 0, 16, rng);
    phi.back() = random_element(spec, rng);
    CHECK_THROWS_AS(descend(w, phi, FlowConfig{}, spec), NumericError);
}
