// Sampled points of the cut-down realization of the hom manifolds of a free
// simplicial group: grid storage of the primitive components, the recursive
// coface condition and its validator, primitive decomposition, the
// cosimplicial action on hom points, component classification over a
// surface, and the degree-two evaluation map of 4-complex attaching words.

#ifndef KANLOOP_REALIZATION_HPP
#define KANLOOP_REALIZATION_HPP

#include <functional>
#include <random>

#include "kanloop/cw.hpp"
#include "kanloop/grid.hpp"
#include "kanloop/lie.hpp"

namespace kanloop {

/**
 * Sampled primitive data: for each degree q up to `top`, the map
 * psi_q : Delta_q -> G^{X_q} on the uniform grid of resolution m, stored as
 * values[q][grid index][generator index] with generators ordered as in
 * nondegen[q].  Degrees with no nondegenerate generators carry empty tuples.
 *
 * A valid point has psi_q = e on every face of Delta_q except the last, and
 * on the last face the value forced by the attaching words and the data one
 * degree down.
 */
struct RealizationPoint {
    Group group = Group::SU2;
    int top = 0;
    int m = 1;
    std::vector<std::vector<std::vector<GroupElement>>> values;
};

/**
 * Read access to a realization point: resolves the value of an arbitrary
 * free generator at a grid point by pushing the point through the affine
 * image of the generator's degeneracy prefix.
 */
class RealizationView {
  public:
    RealizationView(const FreeSimplicialGroup& K, const RealizationPoint& p, const GroupSpec& spec)
        : K_(&K), p_(&p), spec_(spec) {
        if (spec.group != p.group) throw ValidationError("point and spec use different groups");
        if (p.top + 1 != static_cast<int>(p.values.size()))
            throw ValidationError("realization point has wrong number of degrees");
        for (int q = 0; q <= p.top; ++q) {
            grids_.emplace_back(q, p.m);
            std::size_t want =
                q <= K.top_degree() ? K.nondegen[static_cast<std::size_t>(q)].size() : 0;
            const auto& layer = p.values[static_cast<std::size_t>(q)];
            if (layer.size() != grids_.back().size())
                throw ValidationError("degree " + std::to_string(q) +
                                      " layer does not match its grid");
            for (const auto& tuple : layer)
                if (tuple.size() != want)
                    throw ValidationError("degree " + std::to_string(q) +
                                          " tuple does not match the generator count");
            if (q <= K.top_degree())
                for (std::size_t i = 0; i < want; ++i)
                    pos_[K.nondegen[static_cast<std::size_t>(q)][i]] = {q, static_cast<int>(i)};
        }
    }

    const SimplexGrid& grid(int q) const { return grids_[static_cast<std::size_t>(q)]; }
    const GroupSpec& spec() const { return spec_; }

    // Value of generator g (of degree d) at a grid point of Delta_d.
    GroupElement value(int d, const GridPoint& t, const GenRef& g) const {
        if (g.degree() != d) throw DegreeError("generator degree does not match the grid");
        auto it = pos_.find(g.base);
        if (it == pos_.end()) throw UnboundGeneratorError("generator " + g.base + " has no data");
        auto [r, i] = it->second;
        GridPoint u = prefix_image(g, t, p_->m);
        int idx = grids_[static_cast<std::size_t>(r)].index(u);
        return p_->values[static_cast<std::size_t>(r)][static_cast<std::size_t>(idx)]
                         [static_cast<std::size_t>(i)];
    }

    GroupElement eval(int d, const GridPoint& t, const Word& w) const {
        return eval_word(w, [&](const GenRef& g) { return value(d, t, g); }, spec_);
    }

  private:
    const FreeSimplicialGroup* K_;
    const RealizationPoint* p_;
    GroupSpec spec_;
    std::vector<SimplexGrid> grids_;
    std::map<std::string, std::pair<int, int>> pos_;
};

/**
 * The recursion function of degree q: at each grid point of Delta_{q-1},
 * the tuple obtained by evaluating every degree-q attaching word under the
 * hom determined by the data below degree q.  This is what psi_q must equal
 * along the last face.
 */
inline std::vector<std::vector<GroupElement>> coface_last(const FreeSimplicialGroup& K,
                                                          const RealizationPoint& p,
                                                          const GroupSpec& spec, int q) {
    if (q < 1 || q > p.top) throw DegreeError("coface degree out of range");
    RealizationView view(K, p, spec);
    const SimplexGrid& g = view.grid(q - 1);
    std::vector<std::vector<GroupElement>> out(g.size());
    const auto& gens =
        q <= K.top_degree() ? K.nondegen[static_cast<std::size_t>(q)] : std::vector<std::string>{};
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i].reserve(gens.size());
        for (const std::string& name : gens)
            out[i].push_back(view.eval(q - 1, g.points[i], K.attaching(name)));
    }
    return out;
}

struct ValidationReport {
    bool boundary_pass = true;
    bool recursion_pass = true;
    double max_boundary_violation = 0.0;
    double max_recursion_violation = 0.0;
    long long boundary_checks = 0;
    long long recursion_checks = 0;

    bool pass() const { return boundary_pass && recursion_pass; }
    double max_violation() const {
        return std::max(max_boundary_violation, max_recursion_violation);
    }
};

/**
 * Checks both families of conditions at every grid point: the boundary
 * family (identity tuple on every face but the last) and the recursive
 * coface family (last face determined by the degree below).  Violations are
 * geodesic distances; the report carries the maxima.
 */
inline ValidationReport validate_point(const FreeSimplicialGroup& K, const RealizationPoint& p,
                                       const GroupSpec& spec) {
    RealizationView view(K, p, spec);
    ValidationReport rep;
    GroupElement e = GroupElement::identity(spec.group);
    for (int q = 1; q <= p.top; ++q) {
        const SimplexGrid& g = view.grid(q);
        const auto& layer = p.values[static_cast<std::size_t>(q)];
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool pinned = false;
            for (int j = 0; j < q && !pinned; ++j) pinned = on_face(g.points[i], p.m, j);
            if (!pinned) continue;
            for (const GroupElement& v : layer[i]) {
                double d = distance(e, v);
                rep.max_boundary_violation = std::max(rep.max_boundary_violation, d);
                ++rep.boundary_checks;
            }
        }
        auto forced = coface_last(K, p, spec, q);
        const SimplexGrid& below = view.grid(q - 1);
        for (std::size_t i = 0; i < below.size(); ++i) {
            int idx = g.index(last_coface_point(below.points[i]));
            const auto& stored = layer[static_cast<std::size_t>(idx)];
            for (std::size_t c = 0; c < stored.size(); ++c) {
                double d = distance(stored[c], forced[i][c]);
                rep.max_recursion_violation = std::max(rep.max_recursion_violation, d);
                ++rep.recursion_checks;
            }
        }
    }
    rep.boundary_pass = rep.max_boundary_violation <= spec.tol;
    rep.recursion_pass = rep.max_recursion_violation <= spec.tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Hom points and the cosimplicial action.
// ---------------------------------------------------------------------------

// A point of Hom(K_q, G): one value per free generator of degree q.
using HomPoint = std::map<GenRef, GroupElement>;

// Primitive coordinates: tuples over the nondegenerate generators, one block
// per degeneracy prefix (the empty prefix is the top block).
using PrimitiveCoords = std::map<std::vector<int>, std::vector<GroupElement>>;

inline PrimitiveCoords primitive_decompose(const FreeSimplicialGroup& K, int q,
                                           const HomPoint& hom) {
    PrimitiveCoords out;
    for (const GenRef& g : enumerate_generators(K, q)) {
        auto it = hom.find(g);
        if (it == hom.end())
            throw UnboundGeneratorError("hom point misses generator " + to_string(g));
        out[g.prefix].push_back(it->second);
    }
    return out;
}

inline HomPoint primitive_recompose(const FreeSimplicialGroup& K, int q,
                                    const PrimitiveCoords& coords) {
    HomPoint out;
    std::map<std::vector<int>, std::size_t> cursor;
    for (const GenRef& g : enumerate_generators(K, q)) {
        auto it = coords.find(g.prefix);
        if (it == coords.end())
            throw ValidationError("primitive coordinates miss a prefix block");
        std::size_t& c = cursor[g.prefix];
        if (c >= it->second.size())
            throw ValidationError("primitive coordinate block too short");
        out[g] = it->second[c++];
    }
    return out;
}

// The map Hom(K_i, G) -> Hom(K_j, G) induced by a monotone map [i] -> [j]:
// precompose with the word-level action.
inline HomPoint pushforward(const FreeSimplicialGroup& K, const MonotoneMap& theta,
                            const HomPoint& phi, const GroupSpec& spec) {
    HomPoint out;
    for (const GenRef& g : enumerate_generators(K, theta.target))
        out[g] = eval_word(apply_monotone(K, theta, word_of(g)), phi, spec);
    return out;
}

// ---------------------------------------------------------------------------
// Surface fibre: component classification.
// ---------------------------------------------------------------------------

enum class PathStrategy { Geodesic, GeodesicThenConstant };

// Product of commutators of consecutive pairs: the surface relator map.
inline GroupElement relator_value(const std::vector<GroupElement>& w, const GroupSpec& spec) {
    if (w.size() % 2 != 0) throw ValidationError("holonomy tuple must pair up");
    GroupElement acc = GroupElement::identity(spec.group);
    for (std::size_t j = 0; j + 1 < w.size(); j += 2) {
        GroupElement c = mul(mul(w[j], w[j + 1]), mul(inverse(w[j]), inverse(w[j + 1])));
        acc = mul(acc, c);
    }
    return acc;
}

/**
 * Topological type of a fibre point (w, phi): reference paths from e to each
 * holonomy give a commutator-product path psi with the same endpoints as
 * phi; the class of the closed comparison loop reverse(psi) followed by phi
 * is returned.  The result does not depend on the reference path choice.
 */
inline int classify_component(const std::vector<GroupElement>& w,
                              const std::vector<GroupElement>& phi, const GroupSpec& spec,
                              PathStrategy strategy = PathStrategy::Geodesic) {
    if (phi.size() < 2) throw NumericError("path needs at least two samples");
    int m = static_cast<int>(phi.size()) - 1;
    GroupElement rw = relator_value(w, spec);
    if (!approx_identity(phi.front(), spec.tol))
        throw NumericError("path does not start at the identity");
    if (distance(phi.back(), rw) > spec.tol)
        throw NumericError("path endpoint does not match the relator value");
    std::vector<std::vector<GroupElement>> refs;
    for (const GroupElement& wj : w) {
        std::vector<GroupElement> u = geodesic_path(wj, spec, m);
        if (strategy == PathStrategy::GeodesicThenConstant)
            for (int k = 0; k <= m; ++k) u[static_cast<std::size_t>(k)] =
                u[static_cast<std::size_t>(std::min(2 * k, m))];
        refs.push_back(std::move(u));
    }
    std::vector<GroupElement> psi(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        std::vector<GroupElement> snapshot;
        snapshot.reserve(w.size());
        for (const auto& u : refs) snapshot.push_back(u[static_cast<std::size_t>(k)]);
        psi[static_cast<std::size_t>(k)] = relator_value(snapshot, spec);
    }
    // reverse(psi) + phi at double resolution, translated to base the loop at e
    GroupElement base_inv = inverse(psi.back());
    std::vector<GroupElement> loop;
    loop.reserve(2 * static_cast<std::size_t>(m) + 1);
    for (int k = m; k >= 0; --k) loop.push_back(mul(base_inv, psi[static_cast<std::size_t>(k)]));
    for (int k = 1; k <= m; ++k) loop.push_back(mul(base_inv, phi[static_cast<std::size_t>(k)]));
    return loop_class(loop, spec);
}

// ---------------------------------------------------------------------------
// Degree-two evaluation of 4-complex attaching words.
// ---------------------------------------------------------------------------

// The two codegeneracy images of a grid point of Delta_2 in Delta_1.
inline std::pair<GridPoint, GridPoint> eta_maps(const GridPoint& p, int m) {
    std::vector<int> b = to_barycentric(p, m);
    return {from_barycentric(codegeneracy_barycentric(0, b)),
            from_barycentric(codegeneracy_barycentric(1, b))};
}

/**
 * The map sending a based loop phi1 in G^l to the sampled Delta_2 -> G
 * obtained by evaluating the attaching word at (phi1 . eta^0, phi1 . eta^1).
 * Boundary samples come out at the identity whenever gamma is a word in the
 * quadratic-group symbols.
 */
inline std::vector<GroupElement> tau(const std::vector<std::vector<GroupElement>>& phi1,
                                     const Word& gamma, const GroupSpec& spec) {
    if (phi1.size() < 2) throw NumericError("loop needs at least two samples");
    int m = static_cast<int>(phi1.size()) - 1;
    std::size_t ell = phi1.front().size();
    for (const auto& t : phi1)
        if (t.size() != ell) throw ValidationError("ragged loop tuple");
    for (std::size_t j = 0; j < ell; ++j)
        if (!approx_identity(phi1.front()[j], spec.tol) ||
            !approx_identity(phi1.back()[j], spec.tol))
            throw NumericError("loop endpoints must be the identity");
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= ell; ++j) names.push_back("x" + std::to_string(j));
    Word expanded = expand_gamma_word(gamma, names);
    std::map<std::string, std::size_t> slot;
    for (std::size_t j = 0; j < ell; ++j) slot[names[j]] = j;
    SimplexGrid g(2, m);
    std::vector<GroupElement> out;
    out.reserve(g.size());
    for (const GridPoint& p : g.points) {
        std::pair<GridPoint, GridPoint> etas = eta_maps(p, m);
        const std::size_t at0 = static_cast<std::size_t>(etas.first[0]);
        const std::size_t at1 = static_cast<std::size_t>(etas.second[0]);
        out.push_back(eval_word(
            expanded,
            [&](const GenRef& gen) -> const GroupElement& {
                std::size_t j = slot.at(gen.base);
                if (gen.prefix == std::vector<int>{0}) return phi1[at0][j];
                if (gen.prefix == std::vector<int>{1}) return phi1[at1][j];
                throw UnboundGeneratorError("unexpected generator " + to_string(gen));
            },
            spec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Point constructors for the worked families.  Constrained samples are
// written exactly (identity on pinned faces, the recursion values on the
// last face), so constructed points validate to float accuracy.
// ---------------------------------------------------------------------------

namespace detail {

// Geodesic interpolation of a sampled path at a real parameter in [0,1].
inline GroupElement interp_path(const std::vector<GroupElement>& path, double u) {
    int m = static_cast<int>(path.size()) - 1;
    double s = u * m;
    int k = std::min(static_cast<int>(s), m - 1);
    if (k < 0) k = 0;
    double frac = s - k;
    const GroupElement& a = path[static_cast<std::size_t>(k)];
    const GroupElement& b = path[static_cast<std::size_t>(k) + 1];
    return mul(a, exp_alg(a.group, alg_scale(frac, log_step(a, b))));
}

inline RealizationPoint empty_point(const FreeSimplicialGroup& K, const GroupSpec& spec, int top,
                                    int m) {
    RealizationPoint p;
    p.group = spec.group;
    p.top = top;
    p.m = m;
    for (int q = 0; q <= top; ++q) {
        SimplexGrid g(q, m);
        std::size_t want =
            q <= K.top_degree() ? K.nondegen[static_cast<std::size_t>(q)].size() : 0;
        p.values.emplace_back(g.size(),
                              std::vector<GroupElement>(want, GroupElement::identity(spec.group)));
    }
    return p;
}

}  // namespace detail

/**
 * Fibre point of a surface group: holonomies w on the 1-cells and a path phi
 * from e to the relator value, stored against the grid orientation (the
 * recursion pins the t=0 end).
 */
inline RealizationPoint make_surface_point(const FreeSimplicialGroup& K, const GroupSpec& spec,
                                           const std::vector<GroupElement>& w,
                                           const std::vector<GroupElement>& phi) {
    if (K.top_degree() != 1 || K.nondegen[1].size() != 1)
        throw ValidationError("not a surface-type group");
    if (w.size() != K.nondegen[0].size())
        throw ValidationError("holonomy tuple does not match the 1-cells");
    int m = static_cast<int>(phi.size()) - 1;
    if (m < 1) throw ValidationError("path needs at least two samples");
    RealizationPoint p = detail::empty_point(K, spec, 1, m);
    p.values[0][0] = w;
    RealizationView view(K, p, spec);
    GroupElement forced = view.eval(0, {}, K.attaching(K.nondegen[1][0]));
    if (!approx_identity(phi.front(), spec.tol) || distance(phi.back(), forced) > spec.tol)
        throw ValidationError("path endpoints do not satisfy the fibre condition");
    for (int k = 0; k <= m; ++k)
        p.values[1][static_cast<std::size_t>(k)][0] = phi[static_cast<std::size_t>(m - k)];
    p.values[1][static_cast<std::size_t>(0)][0] = forced;  // exact recursion value
    p.values[1][static_cast<std::size_t>(m)][0] = GroupElement::identity(spec.group);
    return p;
}

/**
 * Point over a one-cell-free sphere group: an algebra-valued field scaled by
 * a bump that vanishes on the whole boundary of the top simplex.
 */
inline RealizationPoint make_sphere_point(
    const FreeSimplicialGroup& K, const GroupSpec& spec, int m,
    const std::function<Alg(const std::vector<double>&)>& field) {
    int top = K.top_degree();
    if (K.nondegen[static_cast<std::size_t>(top)].size() != 1)
        throw ValidationError("not a sphere-type group");
    if (!K.attaching(K.nondegen[static_cast<std::size_t>(top)][0]).is_identity() && top >= 1)
        throw ValidationError("sphere generator must attach trivially");
    RealizationPoint p = detail::empty_point(K, spec, top, m);
    SimplexGrid g(top, m);
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<int> b = to_barycentric(g.points[i], m);
        double bump = 1.0;
        std::vector<double> t;
        for (int v : b) {
            bump *= static_cast<double>(v) / m * (top + 1);
            t.push_back(static_cast<double>(v) / m);
        }
        p.values[static_cast<std::size_t>(top)][i][0] =
            exp_alg(spec.group, alg_scale(bump, field(t)));
    }
    return p;
}

/**
 * Point over a spine-type group (degrees 0..2): holonomies w, wiggled
 * relator paths, and the forced top layer extended into the interior by the
 * radial reparametrization u = t1 / (1 - t2).
 */
inline RealizationPoint make_spine_point(const FreeSimplicialGroup& K, const GroupSpec& spec,
                                         const std::vector<GroupElement>& w, int m,
                                         std::mt19937_64& rng, double wiggle = 0.4) {
    if (K.top_degree() != 2) throw ValidationError("not a spine-type group");
    if (w.size() != K.nondegen[0].size())
        throw ValidationError("holonomy tuple does not match the 1-cells");
    RealizationPoint p = detail::empty_point(K, spec, 2, m);
    p.values[0][0] = w;
    RealizationView base(K, p, spec);
    std::size_t n_rel = K.nondegen[1].size();
    std::vector<std::vector<GroupElement>> rel_paths;
    for (std::size_t j = 0; j < n_rel; ++j) {
        GroupElement gj = base.eval(0, {}, K.attaching(K.nondegen[1][j]));
        Alg l = log_group(gj);
        Alg bump = alg_scale(wiggle, random_unit_alg(spec.group, rng));
        std::vector<GroupElement> path(static_cast<std::size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) {
            double t = static_cast<double>(k) / m;
            GroupElement v = exp_alg(spec.group, alg_scale(1.0 - t, l));
            v = mul(v, exp_alg(spec.group, alg_scale(std::sin(M_PI * t), bump)));
            path[static_cast<std::size_t>(k)] = v;
        }
        path[0] = gj;
        path[static_cast<std::size_t>(m)] = GroupElement::identity(spec.group);
        for (int k = 0; k <= m; ++k)
            p.values[1][static_cast<std::size_t>(k)][j] = path[static_cast<std::size_t>(k)];
        rel_paths.push_back(std::move(path));
    }
    if (K.nondegen[2].empty()) return p;
    const Word& a = K.attaching(K.nondegen[2][0]);
    RealizationView view(K, p, spec);
    SimplexGrid g1(1, m), g2(2, m);
    // exact values along the last face, radial interpolation inside
    auto value_at = [&](double u) {
        return eval_word(
            a,
            [&](const GenRef& gen) {
                if (!gen.degenerate())
                    return detail::interp_path(rel_paths[static_cast<std::size_t>(
                                                   std::distance(K.nondegen[1].begin(),
                                                                 std::find(K.nondegen[1].begin(),
                                                                           K.nondegen[1].end(),
                                                                           gen.base)))],
                                               u);
                return base.value(0, {}, GenRef{gen.base, 0, {}});  // s0 of a 1-cell: constant
            },
            spec);
    };
    for (std::size_t i = 0; i < g2.size(); ++i) {
        const GridPoint& t = g2.points[i];
        int t1 = t[0], t2 = t[1], t0 = m - t1 - t2;
        GroupElement v = GroupElement::identity(spec.group);
        if (t1 == 0 || t0 == 0) {
            // pinned faces
        } else if (t2 == 0) {
            v = view.eval(1, GridPoint{t1}, a);
        } else {
            v = value_at(static_cast<double>(t1) / (m - t2));
        }
        p.values[2][i][0] = v;
    }
    return p;
}

/**
 * Point over a 4-complex group (degrees 0..3): a based loop phi1 in G^l and
 * the forced top layer, extended inside by scaling both arguments of the
 * evaluation map radially toward the boundary.
 */
inline RealizationPoint make_four_point(const FreeSimplicialGroup& K, const GroupSpec& spec,
                                        const std::vector<std::vector<GroupElement>>& phi1) {
    if (K.top_degree() != 3 || K.nondegen[3].size() != 1 || !K.nondegen[2].empty())
        throw ValidationError("not a 4-complex-type group");
    std::size_t ell = K.nondegen[1].size();
    int m = static_cast<int>(phi1.size()) - 1;
    if (m < 1) throw ValidationError("loop needs at least two samples");
    for (const auto& t : phi1)
        if (t.size() != ell) throw ValidationError("loop tuple does not match the 2-cells");
    for (std::size_t j = 0; j < ell; ++j)
        if (!approx_identity(phi1.front()[j], spec.tol) ||
            !approx_identity(phi1.back()[j], spec.tol))
            throw ValidationError("loop endpoints must be the identity");
    RealizationPoint p = detail::empty_point(K, spec, 3, m);
    for (int k = 0; k <= m; ++k) p.values[1][static_cast<std::size_t>(k)] = phi1[static_cast<std::size_t>(k)];
    p.values[1][0].assign(ell, GroupElement::identity(spec.group));
    p.values[1][static_cast<std::size_t>(m)].assign(ell, GroupElement::identity(spec.group));
    const Word& a = K.attaching(K.nondegen[3][0]);
    RealizationView view(K, p, spec);
    std::vector<std::vector<GroupElement>> cols(ell);  // per-generator path copies
    for (std::size_t j = 0; j < ell; ++j) {
        cols[j].reserve(phi1.size());
        for (int k = 0; k <= m; ++k)
            cols[j].push_back(p.values[1][static_cast<std::size_t>(k)][j]);
    }
    std::map<std::string, std::size_t> slot;
    for (std::size_t j = 0; j < ell; ++j) slot[K.nondegen[1][j]] = j;
    auto value_at = [&](double u1, double u2) {
        return eval_word(
            a,
            [&](const GenRef& gen) {
                std::size_t j = slot.at(gen.base);
                if (gen.prefix == std::vector<int>{0}) return detail::interp_path(cols[j], u2);
                if (gen.prefix == std::vector<int>{1}) return detail::interp_path(cols[j], u1 + u2);
                throw UnboundGeneratorError("unexpected generator " + to_string(gen));
            },
            spec);
    };
    SimplexGrid g3(3, m);
    for (std::size_t i = 0; i < g3.size(); ++i) {
        const GridPoint& t = g3.points[i];
        int t1 = t[0], t2 = t[1], t3 = t[2], t0 = m - t1 - t2 - t3;
        GroupElement v = GroupElement::identity(spec.group);
        if (t1 == 0 || t2 == 0 || t0 == 0) {
            // pinned faces
        } else if (t3 == 0) {
            v = view.eval(2, GridPoint{t1, t2}, a);
        } else {
            double f = static_cast<double>(t1 + t2 + t3) / (t1 + t2);
            v = value_at(t1 * f / m, t2 * f / m);
        }
        p.values[3][i][0] = v;
    }
    return p;
}

}  // namespace kanloop

#endif  // KANLOOP_REALIZATION_HPP
