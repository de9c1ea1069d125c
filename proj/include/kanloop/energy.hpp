// Discrete path energy on the groups and projected gradient descent on the
// surface fibre: interior samples flow along the algebra-valued gradient of
// the energy with endpoints pinned; an optional joint mode also moves the
// holonomies through the relator word map.

#ifndef KANLOOP_ENERGY_HPP
#define KANLOOP_ENERGY_HPP

#include "kanloop/realization.hpp"

namespace kanloop {

struct FlowConfig {
    int steps = 2000;
    double step_size = 1.0;  // initial trial step; backtracking halves from here
    int grid = 64;
    enum class Mode { FixHolonomies, Joint } mode = Mode::FixHolonomies;
    double stop_grad_norm = 1e-6;
};

// Riemann sum of the squared speed: m * sum |log(phi_k^-1 phi_{k+1})|^2.
inline double path_energy(const std::vector<GroupElement>& phi, const GroupSpec& spec) {
    (void)spec;
    if (phi.size() < 2) throw NumericError("path needs at least two samples");
    int m = static_cast<int>(phi.size()) - 1;
    double e = 0;
    for (int k = 0; k < m; ++k) {
        Alg step = log_step(phi[static_cast<std::size_t>(k)], phi[static_cast<std::size_t>(k) + 1]);
        double len = alg_norm(step);
        if (len >= M_PI / 2) throw NumericError("path sampling too coarse");
        e += len * len;
    }
    return e * m;
}

struct TraceRow {
    int step = 0;
    double energy = 0;
    double grad_norm = 0;
};

struct DescentResult {
    std::vector<GroupElement> path;
    std::vector<GroupElement> holonomies;
    std::vector<TraceRow> trace;
    double final_energy = 0;
    double final_grad_norm = 0;
    int steps_taken = 0;
    bool converged = false;
    int class_before = 0;
    int class_after = 0;
};

namespace detail {

// Interior-sample gradient in body coordinates: 2m (log(phi_{k-1}^-1 phi_k)
// - log(phi_k^-1 phi_{k+1})).  Vanishes exactly on discrete geodesics.
inline std::vector<Alg> interior_gradient(const std::vector<GroupElement>& phi) {
    int m = static_cast<int>(phi.size()) - 1;
    std::vector<Alg> g(static_cast<std::size_t>(m) + 1, alg_zero());
    for (int k = 1; k < m; ++k) {
        Alg before = log_step(phi[static_cast<std::size_t>(k) - 1], phi[static_cast<std::size_t>(k)]);
        Alg after = log_step(phi[static_cast<std::size_t>(k)], phi[static_cast<std::size_t>(k) + 1]);
        g[static_cast<std::size_t>(k)] = alg_scale(2.0 * m, alg_sub(before, after));
    }
    return g;
}

/**
 * Descent direction: the gradient preconditioned by the inverse of the
 * energy's flat Hessian 2m L, with L the interior second-difference matrix.
 * This has the same zeros as the raw gradient but uniform conditioning
 * across sample frequencies; without it, stable explicit steps are capped by
 * the stiffest mode and low-frequency error decays far too slowly to be
 * useful.  Solved per algebra coordinate by the Thomas algorithm.
 */
inline std::vector<Alg> preconditioned_direction(const std::vector<Alg>& g, int m) {
    std::size_t n = static_cast<std::size_t>(m) - 1;  // interior unknowns
    std::vector<Alg> d(static_cast<std::size_t>(m) + 1, alg_zero());
    if (n == 0) return d;
    std::vector<double> c(n), rhs(n);
    for (int coord = 0; coord < 3; ++coord) {
        for (std::size_t i = 0; i < n; ++i) rhs[i] = g[i + 1][static_cast<std::size_t>(coord)];
        double diag = 2.0;
        c[0] = -1.0 / diag;
        rhs[0] /= diag;
        for (std::size_t i = 1; i < n; ++i) {
            double denom = 2.0 + c[i - 1];
            c[i] = -1.0 / denom;
            rhs[i] = (rhs[i] + rhs[i - 1]) / denom;
        }
        for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
        for (std::size_t i = 0; i < n; ++i)
            d[i + 1][static_cast<std::size_t>(coord)] = rhs[i] / (2.0 * m);
    }
    return d;
}

// The surface relator as a word over the holonomy slots x1,y1,..,xl,yl.
inline Word surface_relator_word(std::size_t n) {
    Word r;
    for (std::size_t j = 0; 2 * j + 1 < n; ++j) {
        Word x = word_of(GenRef{"x" + std::to_string(j + 1), 0, {}});
        Word y = word_of(GenRef{"y" + std::to_string(j + 1), 0, {}});
        r = multiply(r, commutator(x, y));
    }
    return r;
}

// Gradient of the last energy term with respect to each holonomy, through
// the word map: suffix-transported copies of the endpoint log.
inline std::vector<Alg> holonomy_gradient(const Word& relator,
                                          const std::vector<GroupElement>& w,
                                          const std::vector<GroupElement>& phi,
                                          const GroupSpec& spec) {
    int m = static_cast<int>(phi.size()) - 1;
    Alg l_end = log_step(phi[static_cast<std::size_t>(m) - 1], phi[static_cast<std::size_t>(m)]);
    std::map<std::string, std::size_t> slot;
    for (std::size_t j = 0; j < w.size(); ++j)
        slot[(j % 2 == 0 ? "x" : "y") + std::to_string(j / 2 + 1)] = j;
    std::vector<Alg> grad(w.size(), alg_zero());
    GroupElement suffix = GroupElement::identity(spec.group);
    const auto& letters = relator.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        std::size_t j = slot.at(it->gen.base);
        if (it->sign > 0) {
            grad[j] = alg_add(grad[j], alg_scale(2.0 * m, adjoint(suffix, l_end)));
        } else {
            GroupElement s = mul(inverse(w[j]), suffix);
            grad[j] = alg_sub(grad[j], alg_scale(2.0 * m, adjoint(s, l_end)));
        }
        GroupElement v = it->sign > 0 ? w[j] : inverse(w[j]);
        suffix = mul(v, suffix);
    }
    return grad;
}

}  // namespace detail

/**
 * Projected gradient descent of the discrete path energy.  The path stays
 * pinned at its endpoints; in joint mode the holonomies move as well and the
 * endpoint follows the relator value.  Steps are accepted only when the
 * energy decreases (backtracking line search, factor 0.5, restarted from the
 * configured trial step), so the energy trace is non-increasing and the
 * topological class of the path is conserved.
 */
inline DescentResult descend(std::vector<GroupElement> w, std::vector<GroupElement> phi,
                             const FlowConfig& cfg, const GroupSpec& spec) {
    if (cfg.step_size <= 0) throw ValidationError("step size must be positive");
    int m = static_cast<int>(phi.size()) - 1;
    if (m < 8) throw ValidationError("descent grid needs at least 8 segments");
    if (!approx_identity(phi.front(), spec.tol))
        throw NumericError("path does not start at the identity");
    if (distance(phi.back(), relator_value(w, spec)) > 10 * spec.tol)
        throw NumericError("path endpoint does not match the relator value");
    Word relator = detail::surface_relator_word(w.size());
    DescentResult res;
    res.class_before = classify_component(w, phi, spec);
    double energy = path_energy(phi, spec);
    int step = 0;
    double gnorm = 0;
    for (; step < cfg.steps; ++step) {
        std::vector<Alg> g = detail::interior_gradient(phi);
        std::vector<Alg> gw;
        double sq = 0;
        for (const Alg& a : g) sq += alg_dot(a, a);
        if (cfg.mode == FlowConfig::Mode::Joint) {
            gw = detail::holonomy_gradient(relator, w, phi, spec);
            for (const Alg& a : gw) sq += alg_dot(a, a);
        }
        gnorm = std::sqrt(sq);
        res.trace.push_back({step, energy, gnorm});
        if (gnorm < cfg.stop_grad_norm) break;
        std::vector<Alg> dir = detail::preconditioned_direction(g, m);
        double eta = cfg.step_size;
        bool accepted = false;
        while (eta > 1e-14) {
            // samples may move at most a quarter turn per accepted step, so
            // every step is a homotopy and the path's class cannot jump
            double max_move = 0;
            for (int k = 1; k < m; ++k)
                max_move = std::max(max_move, eta * alg_norm(dir[static_cast<std::size_t>(k)]));
            if (max_move >= M_PI / 2) {
                eta *= 0.5;
                continue;
            }
            std::vector<GroupElement> cand = phi;
            std::vector<GroupElement> wc = w;
            for (int k = 1; k < m; ++k)
                cand[static_cast<std::size_t>(k)] =
                    mul(phi[static_cast<std::size_t>(k)],
                        exp_alg(spec.group, alg_scale(-eta, dir[static_cast<std::size_t>(k)])));
            if (cfg.mode == FlowConfig::Mode::Joint) {
                for (std::size_t j = 0; j < w.size(); ++j)
                    wc[j] = mul(w[j],
                                exp_alg(spec.group, alg_scale(-eta / (2.0 * m), gw[j])));
                cand.back() = relator_value(wc, spec);
            }
            double cand_energy;
            try {
                cand_energy = path_energy(cand, spec);
            } catch (const NumericError&) {
                eta *= 0.5;
                continue;
            }
            if (cand_energy < energy) {
                phi = std::move(cand);
                w = std::move(wc);
                energy = cand_energy;
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if (!accepted) break;  // stalled at float resolution
    }
    {
        // fresh gradient of the final state
        std::vector<Alg> g = detail::interior_gradient(phi);
        double sq = 0;
        for (const Alg& a : g) sq += alg_dot(a, a);
        if (cfg.mode == FlowConfig::Mode::Joint)
            for (const Alg& a : detail::holonomy_gradient(relator, w, phi, spec))
                sq += alg_dot(a, a);
        gnorm = std::sqrt(sq);
    }
    res.final_energy = energy;
    res.final_grad_norm = gnorm;
    res.steps_taken = step;
    res.converged = gnorm < cfg.stop_grad_norm;
    res.class_after = classify_component(w, phi, spec);
    res.path = std::move(phi);
    res.holonomies = std::move(w);
    return res;
}

}  // namespace kanloop

#endif  // KANLOOP_ENERGY_HPP
