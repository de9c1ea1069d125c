// Uniform barycentric grids on standard simplices, with exact integer
// actions of coface and codegeneracy maps.  Points are kept in independent
// coordinates (t_1..t_q) scaled by the resolution m; the zeroth coordinate
// is implicit.

#ifndef KANLOOP_GRID_HPP
#define KANLOOP_GRID_HPP

#include <map>
#include <numeric>
#include <vector>

#include "kanloop/simplicial.hpp"

namespace kanloop {

using GridPoint = std::vector<int>;  // independent coordinates k_1..k_q, sum <= m

/**
 * The lattice {(k_1..k_q) : k_j >= 0, sum k_j <= m} on the standard
 * q-simplex, enumerated in lexicographic (row-major) order.  Affine images
 * of grid points under monotone maps are again grid points, since those maps
 * only merge and insert barycentric coordinates.
 */
struct SimplexGrid {
    int degree = 0;
    int m = 1;
    std::vector<GridPoint> points;
    std::map<GridPoint, int> index_of;

    SimplexGrid(int degree_, int m_) : degree(degree_), m(m_) {
        if (degree < 0 || m < 1) throw ValidationError("grid needs degree >= 0 and m >= 1");
        GridPoint p(static_cast<std::size_t>(degree), 0);
        enumerate(p, 0, m);
    }

    std::size_t size() const { return points.size(); }

    int index(const GridPoint& p) const {
        auto it = index_of.find(p);
        if (it == index_of.end()) throw ValidationError("point is not on the grid");
        return it->second;
    }

  private:
    void enumerate(GridPoint& p, int pos, int budget) {
        if (pos == degree) {
            index_of.emplace(p, static_cast<int>(points.size()));
            points.push_back(p);
            return;
        }
        for (int k = 0; k <= budget; ++k) {
            p[static_cast<std::size_t>(pos)] = k;
            enumerate(p, pos + 1, budget - k);
        }
    }
};

// Full barycentric coordinates (k_0..k_q) with k_0 = m - sum.
inline std::vector<int> to_barycentric(const GridPoint& p, int m) {
    std::vector<int> b;
    b.reserve(p.size() + 1);
    int sum = std::accumulate(p.begin(), p.end(), 0);
    b.push_back(m - sum);
    b.insert(b.end(), p.begin(), p.end());
    return b;
}

inline GridPoint from_barycentric(const std::vector<int>& b) {
    return GridPoint(b.begin() + 1, b.end());
}

// The affine map of simplices induced by a monotone map theta: [i] -> [j]
// pushes barycentric mass from vertex v to vertex theta(v).
inline std::vector<int> push_barycentric(const MonotoneMap& theta, const std::vector<int>& b) {
    if (b.size() != static_cast<std::size_t>(theta.source) + 1)
        throw ValidationError("barycentric point does not match the map's source");
    std::vector<int> out(static_cast<std::size_t>(theta.target) + 1, 0);
    for (std::size_t v = 0; v < b.size(); ++v)
        out[static_cast<std::size_t>(theta.image[v])] += b[v];
    return out;
}

// Codegeneracy image: adds coordinates j and j+1.
inline std::vector<int> codegeneracy_barycentric(int j, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(b.size() - 1);
    for (std::size_t v = 0; v < b.size(); ++v) {
        if (static_cast<int>(v) == j + 1)
            out.back() += b[v];
        else
            out.push_back(b[v]);
    }
    return out;
}

// Coface image: inserts a zero coordinate at position j.
inline std::vector<int> coface_barycentric(int j, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(b.size() + 1);
    for (std::size_t v = 0; v < b.size(); ++v) {
        if (static_cast<int>(v) == j) out.push_back(0);
        out.push_back(b[v]);
    }
    if (static_cast<std::size_t>(j) == b.size()) out.push_back(0);
    return out;
}

// Image of a grid point of the last face embedding Delta_{q-1} -> Delta_q.
inline GridPoint last_coface_point(const GridPoint& p) {
    GridPoint out = p;
    out.push_back(0);
    return out;
}

// Applies the affine image of the degeneracy prefix of g: the prefix entries
// act as codegeneracies, outermost entry first.
inline GridPoint prefix_image(const GenRef& g, const GridPoint& p, int m) {
    std::vector<int> b = to_barycentric(p, m);
    for (int j : g.prefix) b = codegeneracy_barycentric(j, b);
    return from_barycentric(b);
}

// Face membership of a grid point: face j of Delta_q is {t_j = 0}.
inline bool on_face(const GridPoint& p, int m, int j) {
    std::vector<int> b = to_barycentric(p, m);
    return b[static_cast<std::size_t>(j)] == 0;
}

}  // namespace kanloop

#endif  // KANLOOP_GRID_HPP
