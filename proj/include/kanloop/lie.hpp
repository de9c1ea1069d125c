// Numerical evaluation in U(1), SU(2) and SO(3): group arithmetic on small
// unitary matrices, exp/log in the bi-invariant metric, word evaluation,
// geodesics, and fundamental-group classification of sampled loops.
//
// SO(3) elements are carried as SU(2) representatives of the double cover;
// all SO(3) operations are sign-agnostic, and loop classification tracks a
// continuous lift.

#ifndef KANLOOP_LIE_HPP
#define KANLOOP_LIE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <random>

#include "kanloop/word.hpp"

namespace kanloop {

enum class Group { U1, SU2, SO3 };

struct GroupSpec {
    Group group = Group::SU2;
    double tol = 1e-9;
};

inline std::string group_name(Group g) {
    switch (g) {
        case Group::U1: return "u1";
        case Group::SU2: return "su2";
        case Group::SO3: return "so3";
    }
    return "?";
}

using Complex = std::complex<double>;

// An algebra element in the orthonormal basis of the bi-invariant metric:
// u(1) uses v[0] (the rotation angle), su(2) uses the quaternion units
// i = diag(i,-i), j = [[0,1],[-1,0]], k = [[0,i],[i,0]].
using Alg = std::array<double, 3>;

inline Alg alg_zero() { return {0.0, 0.0, 0.0}; }

inline Alg alg_add(const Alg& a, const Alg& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

inline Alg alg_sub(const Alg& a, const Alg& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Alg alg_scale(double s, const Alg& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline double alg_dot(const Alg& a, const Alg& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double alg_norm(const Alg& a) { return std::sqrt(alg_dot(a, a)); }

/**
 * A group element: a unit complex number for U(1) (stored in m[0]), a 2x2
 * special unitary matrix (row-major) for SU(2), or an SU(2) representative
 * of a rotation for SO(3).
 */
struct GroupElement {
    Group group = Group::SU2;
    std::array<Complex, 4> m{};

    static GroupElement identity(Group g) {
        GroupElement e;
        e.group = g;
        e.m = {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)};
        if (g == Group::U1) e.m = {Complex(1, 0), {}, {}, {}};
        return e;
    }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement mul(const GroupElement& a, const GroupElement& b) {
    GroupElement c;
    c.group = a.group;
    if (a.group == Group::U1) {
        c.m[0] = a.m[0] * b.m[0];
        return c;
    }
    c.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    c.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    c.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    c.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    return c;
}

// Conjugate transpose; the inverse on the unitary groups.
inline GroupElement inverse(const GroupElement& a) {
    GroupElement c;
    c.group = a.group;
    if (a.group == Group::U1) {
        c.m[0] = std::conj(a.m[0]);
        return c;
    }
    c.m = {std::conj(a.m[0]), std::conj(a.m[2]), std::conj(a.m[1]), std::conj(a.m[3])};
    return c;
}

inline GroupElement negate(const GroupElement& a) {
    GroupElement c = a;
    for (auto& z : c.m) z = -z;
    return c;
}

// Quaternion coordinates (w, x, y, z) of a 2x2 matrix; exact on special
// unitary input, the orthogonal projection onto the quaternion subspace
// otherwise.
inline std::array<double, 4> quaternion_of(const GroupElement& a) {
    return {(a.m[0].real() + a.m[3].real()) / 2, (a.m[0].imag() - a.m[3].imag()) / 2,
            (a.m[1].real() - a.m[2].real()) / 2, (a.m[1].imag() + a.m[2].imag()) / 2};
}

inline GroupElement from_quaternion(Group g, const std::array<double, 4>& q) {
    GroupElement a;
    a.group = g;
    a.m[0] = Complex(q[0], q[1]);
    a.m[1] = Complex(q[2], q[3]);
    a.m[2] = Complex(-q[2], q[3]);
    a.m[3] = Complex(q[0], -q[1]);
    return a;
}

// Nearest group element: phase normalization for U(1), normalized quaternion
// part for SU(2)/SO(3).
inline GroupElement project(const GroupElement& a) {
    if (a.group == Group::U1) {
        GroupElement c = a;
        double n = std::abs(a.m[0]);
        c.m[0] = n > 0 ? a.m[0] / n : Complex(1, 0);
        return c;
    }
    auto q = quaternion_of(a);
    double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    if (n == 0) return GroupElement::identity(a.group);
    for (double& v : q) v /= n;
    return from_quaternion(a.group, q);
}

// Frobenius distance to the group manifold.
inline double invariant_defect(const GroupElement& a) {
    if (a.group == Group::U1) return std::abs(std::abs(a.m[0]) - 1.0);
    GroupElement p = project(a);
    double s = 0;
    for (int i = 0; i < 4; ++i) s += std::norm(a.m[i] - p.m[i]);
    return std::sqrt(s);
}

inline GroupElement exp_alg(Group g, const Alg& v) {
    if (g == Group::U1) {
        GroupElement a;
        a.group = g;
        a.m[0] = std::polar(1.0, v[0]);
        return a;
    }
    double theta = alg_norm(v);
    double s = theta < 1e-12 ? 1.0 - theta * theta / 6.0 : std::sin(theta) / theta;
    return from_quaternion(g, {std::cos(theta), s * v[0], s * v[1], s * v[2]});
}

/**
 * Principal logarithm.  For SU(2) the result has norm in [0, pi]; at the cut
 * locus -I the k-axis is chosen.  For SO(3) the logarithm of the nearer lift
 * is returned (norm in [0, pi/2]).
 */
inline Alg log_group(const GroupElement& a) {
    if (a.group == Group::U1) return {std::arg(a.m[0]), 0.0, 0.0};
    auto q = quaternion_of(a);
    if (a.group == Group::SO3 && q[0] < 0)
        for (double& v : q) v = -v;
    double vn = std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    double theta = std::atan2(vn, q[0]);
    if (vn < 1e-15) {
        if (q[0] < 0) return {0.0, 0.0, M_PI};  // cut locus: deterministic axis
        return alg_zero();
    }
    return alg_scale(theta / vn, {q[1], q[2], q[3]});
}

// log(a^-1 b); the algebra-valued step between adjacent samples.
inline Alg log_step(const GroupElement& a, const GroupElement& b) {
    return log_group(mul(inverse(a), b));
}

// Geodesic distance in the bi-invariant metric (sign-agnostic for SO(3)).
inline double distance(const GroupElement& a, const GroupElement& b) {
    return alg_norm(log_step(a, b));
}

inline bool approx_identity(const GroupElement& a, double tol) {
    return distance(GroupElement::identity(a.group), a) <= tol;
}

// Ad(g) X = g X g^-1 on algebra coordinates.
inline Alg adjoint(const GroupElement& g, const Alg& x) {
    if (g.group == Group::U1) return x;
    auto q = quaternion_of(g);
    // conjugation by a unit quaternion rotates the imaginary part
    double w = q[0];
    Alg u{q[1], q[2], q[3]};
    Alg cross{u[1] * x[2] - u[2] * x[1], u[2] * x[0] - u[0] * x[2], u[0] * x[1] - u[1] * x[0]};
    Alg term = alg_add(alg_scale(w * w - alg_dot(u, u), x),
                       alg_add(alg_scale(2 * alg_dot(u, x), u), alg_scale(2 * w, cross)));
    return term;
}

/**
 * Homomorphic word evaluation under a generator assignment.  The
 * accumulating product is re-projected onto the group every 64
 * multiplications; drift beyond 10x the configured tolerance is an error.
 */
template <class Image>
    requires std::invocable<Image&, const GenRef&>
GroupElement eval_word(const Word& w, Image&& image, const GroupSpec& spec) {
    GroupElement acc = GroupElement::identity(spec.group);
    int count = 0;
    for (const Letter& l : w.letters()) {
        GroupElement v = image(l.gen);
        if (v.group != spec.group) throw NumericError("group mismatch in word evaluation");
        if (l.sign < 0) v = inverse(v);
        acc = mul(acc, v);
        if (++count % 64 == 0) {
            if (invariant_defect(acc) > 10 * spec.tol)
                throw NumericError("invariant drift beyond 10x tolerance during evaluation");
            acc = project(acc);
        }
    }
    return acc;
}

inline GroupElement eval_word(const Word& w, const std::map<GenRef, GroupElement>& assignment,
                              const GroupSpec& spec) {
    return eval_word(
        w,
        [&](const GenRef& g) -> const GroupElement& {
            auto it = assignment.find(g);
            if (it == assignment.end())
                throw UnboundGeneratorError("no value bound for generator " + to_string(g));
            return it->second;
        },
        spec);
}

/**
 * Constant-speed geodesic from the identity to g, sampled at m+1 points.
 * exp(t log g); for SO(3) the shorter of the two lifts is followed.
 */
inline std::vector<GroupElement> geodesic_path(const GroupElement& g, const GroupSpec& spec,
                                               int samples) {
    if (samples < 1) throw NumericError("geodesic needs at least one step");
    Alg l = log_group(g);
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(samples) + 1);
    for (int k = 0; k <= samples; ++k)
        out.push_back(exp_alg(spec.group, alg_scale(static_cast<double>(k) / samples, l)));
    return out;
}

/**
 * Class of a sampled closed loop at the identity in pi_1: the winding number
 * for U(1), 0 for SU(2), and the Z/2 class of the continuous SU(2) lift for
 * SO(3).  Adjacent samples must stay within a quarter turn.
 */
inline int loop_class(const std::vector<GroupElement>& samples, const GroupSpec& spec) {
    if (samples.size() < 2) throw NumericError("loop needs at least two samples");
    double closure_tol = std::max(spec.tol, 1e-12);
    if (!approx_identity(samples.front(), closure_tol) ||
        !approx_identity(samples.back(), closure_tol))
        throw NumericError("loop is not closed at the identity");
    switch (spec.group) {
        case Group::U1: {
            double total = 0;
            for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
                double step = std::arg(samples[k + 1].m[0] / samples[k].m[0]);
                if (std::abs(step) >= M_PI / 2) throw NumericError("loop sampling too coarse");
                total += step;
            }
            return static_cast<int>(std::lround(total / (2 * M_PI)));
        }
        case Group::SU2: {
            for (std::size_t k = 0; k + 1 < samples.size(); ++k)
                if (distance(samples[k], samples[k + 1]) >= M_PI / 2)
                    throw NumericError("loop sampling too coarse");
            return 0;
        }
        case Group::SO3: {
            // continuous lift through the double cover; the end sign is the class
            auto raw_angle = [](const GroupElement& a) {
                auto q = quaternion_of(a);
                double vn = std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
                return std::atan2(vn, q[0]);  // in [0, pi], sign-sensitive
            };
            GroupElement lift = samples.front();
            if (quaternion_of(lift)[0] < 0) lift = negate(lift);
            for (std::size_t k = 1; k < samples.size(); ++k) {
                GroupElement cand = samples[k];
                double da = raw_angle(mul(inverse(lift), cand));
                if (da > M_PI / 2) {
                    cand = negate(cand);
                    da = M_PI - da;
                }
                if (da >= M_PI / 4) throw NumericError("loop sampling too coarse");
                lift = cand;
            }
            double w = quaternion_of(lift)[0];
            if (std::abs(std::abs(w) - 1.0) > 1e-6)
                throw NumericError("lifted loop does not end at +-identity");
            return w < 0 ? 1 : 0;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Randomization helpers for fixtures and property tests.
// ---------------------------------------------------------------------------

inline Alg random_unit_alg(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Alg v{n(rng), n(rng), n(rng)};
    double len = alg_norm(v);
    if (len < 1e-12) return {0.0, 0.0, 1.0};
    return alg_scale(1.0 / len, v);
}

// Unit algebra direction appropriate to the group: only the angle slot for
// U(1), a unit 3-vector otherwise.
inline Alg random_unit_alg(Group g, std::mt19937_64& rng) {
    if (g == Group::U1)
        return {std::uniform_int_distribution<int>(0, 1)(rng) ? 1.0 : -1.0, 0.0, 0.0};
    return random_unit_alg(rng);
}

inline GroupElement random_element(const GroupSpec& spec, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-M_PI, M_PI);
    if (spec.group == Group::U1) return exp_alg(Group::U1, {u(rng), 0, 0});
    std::normal_distribution<double> n(0.0, 1.0);
    std::array<double, 4> q{n(rng), n(rng), n(rng), n(rng)};
    double len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    if (len < 1e-12) return GroupElement::identity(spec.group);
    for (double& v : q) v /= len;
    return from_quaternion(spec.group, q);
}

}  // namespace kanloop

#endif  // KANLOOP_LIE_HPP
