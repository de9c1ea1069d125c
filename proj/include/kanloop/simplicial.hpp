// Free simplicial groups on a CW-basis: face and degeneracy operators via
// the simplicial identities, the action of arbitrary monotone maps, and
// Moore-complex membership and boundary.

#ifndef KANLOOP_SIMPLICIAL_HPP
#define KANLOOP_SIMPLICIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "kanloop/word.hpp"

namespace kanloop {

/**
 * A free simplicial group presented by its nondegenerate generators.
 * `nondegen[q]` lists the generator names of degree q; a generator of degree
 * q >= 1 carries an attaching word of degree q-1 (its last face).  All faces
 * below the top vanish structurally, and every degree-q group is free on the
 * nondegenerate generators plus their canonical degeneracies.
 */
struct FreeSimplicialGroup {
    std::vector<std::vector<std::string>> nondegen;
    std::map<std::string, Word> attach;
    std::map<std::string, int> degree_of;

    int top_degree() const { return static_cast<int>(nondegen.size()) - 1; }

    bool has_generator(const std::string& name) const { return degree_of.count(name) != 0; }

    int generator_degree(const std::string& name) const {
        auto it = degree_of.find(name);
        if (it == degree_of.end()) throw UnboundGeneratorError("unknown generator " + name);
        return it->second;
    }

    GenRef gen(const std::string& name) const { return GenRef{name, generator_degree(name), {}}; }

    const Word& attaching(const std::string& name) const {
        auto it = attach.find(name);
        if (it == attach.end()) throw UnboundGeneratorError("no attaching word for " + name);
        return it->second;
    }

    // Resolves base-generator degrees for the word parser.
    DegreeResolver resolver() const {
        return [this](const std::string& name) { return generator_degree(name); };
    }
};

inline Word degeneracy(int i, const Word& w);

/**
 * Face of a single generator.  The index is pushed through the degeneracy
 * prefix with d_i s_j = s_{j-1} d_i (i < j), d_i s_j = id (i in {j, j+1}),
 * d_i s_j = s_j d_{i-1} (i > j+1).  A residual face below the base degree
 * gives e; the residual face at the base degree gives the attaching word
 * with the surviving degeneracies applied.
 */
inline Word face_gen(const FreeSimplicialGroup& K, int i, const GenRef& g) {
    std::vector<int> kept;
    int idx = i;
    const auto& p = g.prefix;
    for (std::size_t pos = 0; pos < p.size(); ++pos) {
        int j = p[pos];
        if (idx < j) {
            kept.push_back(j - 1);
        } else if (idx == j || idx == j + 1) {
            GenRef out{g.base, g.base_degree, kept};
            out.prefix.insert(out.prefix.end(), p.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                              p.end());
            return word_of(std::move(out));
        } else {
            kept.push_back(j);
            --idx;
        }
    }
    if (idx < g.base_degree) return Word{};
    if (idx > g.base_degree)
        throw DegreeError("face index exceeded the base degree on " + g.base);
    Word out = K.attaching(g.base);
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) out = degeneracy(*it, out);
    return out;
}

inline Word face(const FreeSimplicialGroup& K, int i, const Word& w) {
    if (w.is_identity()) return w;
    int q = *w.degree();
    if (q < 1) throw DegreeError("no face operators in degree 0");
    if (i < 0 || i > q)
        throw DegreeError("face index " + std::to_string(i) + " out of range in degree " +
                          std::to_string(q));
    return fold_word<Word>(
        w, Word{}, [&](const GenRef& g) { return face_gen(K, i, g); },
        [](Word a, const Word& b) { return multiply(a, b); },
        [](const Word& a) { return invert(a); });
}

// Letterwise degeneracy; canonical prefixes keep the word reduced.
inline Word degeneracy(int i, const Word& w) {
    if (w.is_identity()) return w;
    int q = *w.degree();
    if (i < 0 || i > q)
        throw DegreeError("degeneracy index " + std::to_string(i) + " out of range in degree " +
                          std::to_string(q));
    std::vector<Letter> out;
    out.reserve(w.length());
    for (const Letter& l : w.letters()) out.push_back(Letter{degeneracy_gen(i, l.gen), l.sign});
    return Word(std::move(out));
}

/**
 * All free generators of degree q: the nondegenerate ones plus every
 * canonical degeneracy of lower-degree ones.  A base of degree r contributes
 * one generator per (q-r)-subset of {0..q-1}, taken as a strictly decreasing
 * prefix; subsets are enumerated in lexicographic order of their ascending
 * form.
 */
inline std::vector<GenRef> enumerate_generators(const FreeSimplicialGroup& K, int q) {
    if (q < 0) throw DegreeError("negative degree");
    std::vector<GenRef> out;
    for (int r = 0; r <= q && r <= K.top_degree(); ++r) {
        int k = q - r;
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (const std::string& base : K.nondegen[static_cast<std::size_t>(r)]) {
            if (k == 0) {
                out.push_back(GenRef{base, r, {}});
                continue;
            }
            // first ascending k-subset of {0..q-1}
            for (int t = 0; t < k; ++t) subset[static_cast<std::size_t>(t)] = t;
            while (true) {
                GenRef g{base, r, std::vector<int>(subset.rbegin(), subset.rend())};
                out.push_back(std::move(g));
                int t = k - 1;
                while (t >= 0 && subset[static_cast<std::size_t>(t)] == q - k + t) --t;
                if (t < 0) break;
                ++subset[static_cast<std::size_t>(t)];
                for (int u = t + 1; u < k; ++u)
                    subset[static_cast<std::size_t>(u)] = subset[static_cast<std::size_t>(u - 1)] + 1;
            }
        }
    }
    return out;
}

/**
 * A monotone map [source] -> [target], stored by its value list.  These
 * generate the operator calculus: every map factors as faces after
 * degeneracies, which is how it acts on words.
 */
struct MonotoneMap {
    int source = 0;
    int target = 0;
    std::vector<int> image;  // size source+1, weakly increasing

    static MonotoneMap identity(int n) {
        MonotoneMap m{n, n, {}};
        m.image.resize(static_cast<std::size_t>(n) + 1);
        for (int v = 0; v <= n; ++v) m.image[static_cast<std::size_t>(v)] = v;
        return m;
    }

    // coface: the injection [q-1] -> [q] missing j
    static MonotoneMap coface(int j, int q) {
        MonotoneMap m{q - 1, q, {}};
        for (int v = 0; v < q; ++v) m.image.push_back(v < j ? v : v + 1);
        return m;
    }

    // codegeneracy: the surjection [q+1] -> [q] hitting j twice
    static MonotoneMap codegeneracy(int j, int q) {
        MonotoneMap m{q + 1, q, {}};
        for (int v = 0; v <= q + 1; ++v) m.image.push_back(v <= j ? v : v - 1);
        return m;
    }

    friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
};

inline void validate_monotone(const MonotoneMap& m) {
    if (m.source < 0 || m.target < 0 ||
        m.image.size() != static_cast<std::size_t>(m.source) + 1)
        throw ValidationError("malformed monotone map");
    for (std::size_t v = 0; v < m.image.size(); ++v) {
        if (m.image[v] < 0 || m.image[v] > m.target)
            throw ValidationError("monotone map value out of range");
        if (v > 0 && m.image[v] < m.image[v - 1])
            throw ValidationError("monotone map not weakly increasing");
    }
}

// outer . inner as functions
inline MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
    if (inner.target != outer.source) throw ValidationError("monotone maps do not compose");
    MonotoneMap m{inner.source, outer.target, {}};
    m.image.reserve(inner.image.size());
    for (int v : inner.image) m.image.push_back(outer.image[static_cast<std::size_t>(v)]);
    return m;
}

/**
 * Contravariant action of a monotone map [i] -> [j] on a word of degree j.
 * Faces for the missing targets are applied largest first, then degeneracies
 * for the repeated values smallest first, per the epi-mono factorization.
 */
inline Word apply_monotone(const FreeSimplicialGroup& K, const MonotoneMap& theta, const Word& w) {
    validate_monotone(theta);
    if (w.degree() && *w.degree() != theta.target)
        throw DegreeError("word degree does not match the map's target");
    Word out = w;
    std::vector<bool> hit(static_cast<std::size_t>(theta.target) + 1, false);
    for (int v : theta.image) hit[static_cast<std::size_t>(v)] = true;
    for (int t = theta.target; t >= 0; --t)
        if (!hit[static_cast<std::size_t>(t)]) out = face(K, t, out);
    for (int b = 0; b < theta.source; ++b)
        if (theta.image[static_cast<std::size_t>(b)] == theta.image[static_cast<std::size_t>(b) + 1])
            out = degeneracy(b, out);
    return out;
}

// Membership in the Moore complex: all faces but the last vanish.
inline bool moore_member(const FreeSimplicialGroup& K, const Word& w) {
    if (w.is_identity()) return true;
    int q = *w.degree();
    if (q < 1) throw DegreeError("Moore membership needs degree >= 1");
    for (int j = 0; j < q; ++j)
        if (!face(K, j, w).is_identity()) return false;
    return true;
}

// Moore boundary: the last face, defined on Moore members only.
inline Word moore_boundary(const FreeSimplicialGroup& K, const Word& w) {
    if (w.is_identity()) return w;
    if (!moore_member(K, w)) throw ValidationError("word is not a Moore-complex member");
    return face(K, *w.degree(), w);
}

// Structural validation: attaching words live one degree down, reference
// known generators, and are Moore members themselves.
inline void validate_group(const FreeSimplicialGroup& K) {
    std::map<std::string, int> seen;
    for (int q = 0; q <= K.top_degree(); ++q) {
        for (const std::string& name : K.nondegen[static_cast<std::size_t>(q)]) {
            if (!seen.emplace(name, q).second)
                throw ValidationError("duplicate generator name " + name);
            auto it = K.degree_of.find(name);
            if (it == K.degree_of.end() || it->second != q)
                throw ValidationError("degree table disagrees for " + name);
            if (q >= 1) {
                const Word& a = K.attaching(name);
                if (a.degree() && *a.degree() != q - 1)
                    throw ValidationError("attaching word of " + name + " has wrong degree");
                for (const Letter& l : a.letters()) {
                    validate_genref(l.gen);
                    if (!K.has_generator(l.gen.base) ||
                        K.generator_degree(l.gen.base) != l.gen.base_degree)
                        throw ValidationError("attaching word of " + name +
                                              " uses unknown generator " + l.gen.base);
                }
                if (q >= 2 && !moore_member(K, a))
                    throw ValidationError("attaching word of " + name +
                                          " is not a Moore member");
            }
        }
    }
}

}  // namespace kanloop

#endif  // KANLOOP_SIMPLICIAL_HPP
