// Normalized integer chain complex of a free simplicial group and its
// homology via Smith normal form.

#ifndef KANLOOP_HOMOLOGY_HPP
#define KANLOOP_HOMOLOGY_HPP

#include <cstdlib>
#include <numeric>
#include <vector>

#include "kanloop/simplicial.hpp"

namespace kanloop {

using IntMatrix = std::vector<std::vector<long long>>;  // row-major

/**
 * Normalized boundary matrix in degree k: chain groups are free abelian on
 * the nondegenerate generators, the differential is the alternating face
 * sum with degenerate letters projected out.  Rows index degree k-1
 * generators, columns degree k ones.
 */
inline IntMatrix normalized_boundary(const FreeSimplicialGroup& K, int k) {
    if (k < 1) throw DegreeError("boundary defined for degree >= 1");
    std::size_t rows = k - 1 <= K.top_degree()
                           ? K.nondegen[static_cast<std::size_t>(k - 1)].size()
                           : 0;
    std::size_t cols = k <= K.top_degree() ? K.nondegen[static_cast<std::size_t>(k)].size() : 0;
    IntMatrix d(rows, std::vector<long long>(cols, 0));
    if (rows == 0 || cols == 0) return d;
    std::map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < rows; ++i) row_of[K.nondegen[static_cast<std::size_t>(k - 1)][i]] = i;
    for (std::size_t c = 0; c < cols; ++c) {
        Word x = word_of(K.gen(K.nondegen[static_cast<std::size_t>(k)][c]));
        long long sgn = 1;
        for (int i = 0; i <= k; ++i, sgn = -sgn) {
            for (const auto& [g, e] : exponent_vector(face(K, i, x))) {
                if (g.degenerate()) continue;
                d[row_of.at(g.base)][c] += sgn * e;
            }
        }
    }
    return d;
}

/**
 * Invariant factors of an integer matrix.  Diagonalization by Euclidean row
 * and column operations with smallest-pivot selection, followed by the
 * gcd/lcm pass that enforces the divisibility chain.  Returned entries are
 * nonnegative; trailing zeros are kept.
 */
inline std::vector<long long> smith_normal_form(IntMatrix a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t n = std::min(rows, cols);
    std::vector<long long> diag;
    for (std::size_t t = 0; t < n; ++t) {
        // smallest nonzero pivot in the remaining block
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
                    best = std::abs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                long long q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                long long q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(std::abs(a[t][t]));
    }
    // divisibility chain: diag(a, b) ~ diag(gcd, lcm)
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                long long g = std::gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = g;
            }
    diag.resize(n, 0);
    return diag;
}

inline std::size_t matrix_rank(const IntMatrix& a) {
    std::size_t r = 0;
    for (long long d : smith_normal_form(a))
        if (d != 0) ++r;
    return r;
}

struct HomologySummary {
    int degree = 0;
    long long betti = 0;
    std::vector<long long> torsion;

    friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/**
 * Homology of the normalized complex in degrees 0..max_degree.  For a Kan
 * group this computes the homotopy of the loop-space model, i.e. the reduced
 * homology of the underlying complex shifted down by one.
 */
inline std::vector<HomologySummary> homology(const FreeSimplicialGroup& K, int max_degree) {
    std::vector<HomologySummary> out;
    for (int n = 0; n <= max_degree; ++n) {
        HomologySummary h;
        h.degree = n;
        std::size_t dim =
            n <= K.top_degree() ? K.nondegen[static_cast<std::size_t>(n)].size() : 0;
        std::size_t rank_in = n >= 1 ? matrix_rank(normalized_boundary(K, n)) : 0;
        auto factors = smith_normal_form(normalized_boundary(K, n + 1));
        std::size_t rank_out = 0;
        for (long long d : factors) {
            if (d == 0) continue;
            ++rank_out;
            if (d > 1) h.torsion.push_back(d);
        }
        h.betti = static_cast<long long>(dim) - static_cast<long long>(rank_in) -
                  static_cast<long long>(rank_out);
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace kanloop

#endif  // KANLOOP_HOMOLOGY_HPP
