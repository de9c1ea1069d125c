// Reduced CW-complex descriptions, canonical builders, the Kan group
// construction, identity-among-relations validation, and intersection forms
// of 4-complex attaching words.

#ifndef KANLOOP_CW_HPP
#define KANLOOP_CW_HPP

#include <map>
#include <string>
#include <vector>

#include "kanloop/simplicial.hpp"

namespace kanloop {

/**
 * One conjugated-relator term of an identity among relations:
 * z * r_j^sign * z^-1 with z a word in the 1-cell generators and j a
 * 1-based 2-cell index.
 */
struct IdentityTerm {
    Word conjugator;
    int relator = 1;
    int sign = +1;
};

struct IdentitySequence {
    std::vector<IdentityTerm> terms;
};

/**
 * A CW-complex with a single implicit 0-cell.  Cells of dimension >= 1 are
 * named; attaching data is combinatorial: 2-cells attach by words in the
 * 1-cells, 3-cells by identities among relations, 4-cells by words in the
 * quadratic-group symbols v<j> / w<i>_<j>, and higher cells by raw words one
 * degree down (experimental; validated by Moore membership only).
 */
struct ReducedCWComplex {
    std::map<int, std::vector<std::string>> cells;
    std::map<std::string, Word> attach2;
    std::map<std::string, IdentitySequence> attach3;
    std::map<std::string, Word> attach4;
    std::map<std::string, Word> general_attach;

    const std::vector<std::string>& cells_of_dim(int d) const {
        static const std::vector<std::string> none;
        auto it = cells.find(d);
        return it == cells.end() ? none : it->second;
    }

    int top_dimension() const { return cells.empty() ? 0 : cells.rbegin()->first; }
};

// True iff substituting each relator word for its symbol reduces the
// identity sequence to the trivial element.
inline bool validate_identity(const std::vector<Word>& relators, const IdentitySequence& id) {
    Word total;
    for (const IdentityTerm& t : id.terms) {
        if (t.relator < 1 || t.relator > static_cast<int>(relators.size()))
            throw ValidationError("identity term references relator " + std::to_string(t.relator) +
                                  " out of range");
        Word piece = power(relators[static_cast<std::size_t>(t.relator - 1)], t.sign);
        total = multiply(total, multiply(multiply(t.conjugator, piece), invert(t.conjugator)));
    }
    return total.is_identity();
}

// ---------------------------------------------------------------------------
// Quadratic-group symbols for 4-complex attaching words.  v<j> stands for the
// commutator [s0 x_j, s1 x_j] and w<i>_<j> (i < j) for its conjugate
// s0 x_i * v_j * (s0 x_i)^-1, where x_1..x_l are the 2-cell generators.
// ---------------------------------------------------------------------------

struct GammaSymbol {
    int i = 0;  // 0 for v<j>
    int j = 0;
};

inline GammaSymbol parse_gamma_symbol(const std::string& name, int ell) {
    GammaSymbol s;
    try {
        if (name.size() >= 2 && name[0] == 'v') {
            s.j = std::stoi(name.substr(1));
        } else if (name.size() >= 4 && name[0] == 'w') {
            auto sep = name.find('_');
            if (sep == std::string::npos) throw ParseError("");
            s.i = std::stoi(name.substr(1, sep - 1));
            s.j = std::stoi(name.substr(sep + 1));
        } else {
            throw ParseError("");
        }
    } catch (const std::exception&) {
        throw ValidationError("malformed quadratic-group symbol " + name);
    }
    if (s.j < 1 || s.j > ell || s.i < 0 || s.i > ell || (s.i != 0 && s.i >= s.j))
        throw ValidationError("quadratic-group symbol " + name + " out of range for l = " +
                              std::to_string(ell));
    return s;
}

// The basis symbols of the degree-2 quadratic layer: v1..vl then w<i>_<j>
// for i < j.  Its size is binom(l+1, 2).
inline std::vector<std::string> gamma_basis(int ell) {
    std::vector<std::string> out;
    for (int j = 1; j <= ell; ++j) out.push_back("v" + std::to_string(j));
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j)
            out.push_back("w" + std::to_string(i) + "_" + std::to_string(j));
    return out;
}

// Expands a word in v/w symbols into the degree-2 word over the degenerate
// generators of the given 2-cells.
inline Word expand_gamma_word(const Word& gamma, const std::vector<std::string>& two_cells) {
    int ell = static_cast<int>(two_cells.size());
    auto v_word = [&](int j) {
        GenRef x{two_cells[static_cast<std::size_t>(j - 1)], 1, {}};
        return commutator(word_of(degeneracy_gen(0, x)), word_of(degeneracy_gen(1, x)));
    };
    return fold_word<Word>(
        gamma, Word{},
        [&](const GenRef& g) {
            GammaSymbol s = parse_gamma_symbol(g.base, ell);
            if (s.i == 0) return v_word(s.j);
            Word conj = word_of(degeneracy_gen(0, GenRef{two_cells[static_cast<std::size_t>(s.i - 1)], 1, {}}));
            return multiply(multiply(conj, v_word(s.j)), invert(conj));
        },
        [](Word a, const Word& b) { return multiply(a, b); },
        [](const Word& a) { return invert(a); });
}

/**
 * The intersection pairing induced by a 4-cell attaching word: the diagonal
 * entry Q[j][j] is the exponent sum of v<j>, the off-diagonal Q[i][j] =
 * Q[j][i] the exponent sum of w<i>_<j>.
 */
inline std::vector<std::vector<long long>> intersection_form(const Word& gamma, int ell) {
    std::vector<std::vector<long long>> q(static_cast<std::size_t>(ell),
                                          std::vector<long long>(static_cast<std::size_t>(ell), 0));
    for (const Letter& l : gamma.letters()) {
        GammaSymbol s = parse_gamma_symbol(l.gen.base, ell);
        if (s.i == 0) {
            q[static_cast<std::size_t>(s.j - 1)][static_cast<std::size_t>(s.j - 1)] += l.sign;
        } else {
            q[static_cast<std::size_t>(s.i - 1)][static_cast<std::size_t>(s.j - 1)] += l.sign;
            q[static_cast<std::size_t>(s.j - 1)][static_cast<std::size_t>(s.i - 1)] += l.sign;
        }
    }
    return q;
}

// Exact determinant by fraction-free (Bareiss) elimination; fine at the
// small sizes that occur here.
inline long long integer_determinant(std::vector<std::vector<long long>> a) {
    std::size_t n = a.size();
    long long prev = 1, sign = 1;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (a[t][t] == 0) {
            std::size_t s = t + 1;
            while (s < n && a[s][t] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[t], a[s]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) / prev;
        prev = a[t][t];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

inline bool is_nondegenerate(const std::vector<std::vector<long long>>& q) {
    return integer_determinant(q) != 0;
}

// ---------------------------------------------------------------------------
// Builders for the canonical families.
// ---------------------------------------------------------------------------

// Genus-l closed surface: 1-cells x1,y1,..,xl,yl and one 2-cell "r" attached
// along the product of commutators.  Genus 0 leaves a trivially attached
// 2-cell.
inline ReducedCWComplex surface(int ell) {
    if (ell < 0) throw ValidationError("genus must be >= 0");
    ReducedCWComplex y;
    Word rel;
    for (int j = 1; j <= ell; ++j) {
        std::string xs = "x" + std::to_string(j), ys = "y" + std::to_string(j);
        y.cells[1].push_back(xs);
        y.cells[1].push_back(ys);
        rel = multiply(rel, commutator(word_of(GenRef{xs, 0, {}}), word_of(GenRef{ys, 0, {}})));
    }
    y.cells[2].push_back("r");
    y.attach2["r"] = rel;
    return y;
}

// The q-sphere with one q-cell.
inline ReducedCWComplex sphere(int q) {
    if (q < 1) throw ValidationError("sphere dimension must be >= 1");
    ReducedCWComplex y;
    y.cells[q].push_back("x");
    if (q == 2) y.attach2["x"] = Word{};
    else if (q == 3) y.attach3["x"] = IdentitySequence{};
    else if (q == 4) y.attach4["x"] = Word{};
    else if (q >= 5) y.general_attach["x"] = Word{};
    return y;
}

// A 3-complex with 1-cells x1..xn, one 2-cell per relator word, and a single
// 3-cell attached along an identity among relations.
inline ReducedCWComplex spine3(int n_one_cells, const std::vector<Word>& relators,
                               const IdentitySequence& id) {
    if (n_one_cells < 0) throw ValidationError("negative 1-cell count");
    ReducedCWComplex y;
    for (int j = 1; j <= n_one_cells; ++j) y.cells[1].push_back("x" + std::to_string(j));
    for (std::size_t j = 0; j < relators.size(); ++j) {
        std::string name = "r" + std::to_string(j + 1);
        y.cells[2].push_back(name);
        y.attach2[name] = relators[j];
    }
    y.cells[3].push_back("sigma");
    y.attach3["sigma"] = id;
    return y;
}

// A simply connected 4-complex: l trivially attached 2-cells x1..xl and one
// 4-cell attached along a word in the quadratic-group symbols.
inline ReducedCWComplex four_complex(int ell, const Word& gamma) {
    if (ell < 0) throw ValidationError("negative 2-cell count");
    ReducedCWComplex y;
    for (int j = 1; j <= ell; ++j) {
        std::string name = "x" + std::to_string(j);
        y.cells[2].push_back(name);
        y.attach2[name] = Word{};
    }
    y.cells[4].push_back("sigma");
    y.attach4["sigma"] = gamma;
    return y;
}

// ---------------------------------------------------------------------------
// Kan's construction.
// ---------------------------------------------------------------------------

inline void validate_complex(const ReducedCWComplex& y) {
    std::map<std::string, int> dim_of;
    for (const auto& [d, names] : y.cells) {
        if (d < 1) throw ValidationError("cells must have dimension >= 1");
        for (const std::string& n : names)
            if (!dim_of.emplace(n, d).second) throw ValidationError("duplicate cell name " + n);
    }
    auto expect = [&](const std::string& n, int d, const char* what) {
        auto it = dim_of.find(n);
        if (it == dim_of.end() || it->second != d)
            throw ValidationError(std::string(what) + " data for " + n + " does not name a " +
                                  std::to_string(d) + "-cell");
    };
    for (const auto& [n, w] : y.attach2) {
        expect(n, 2, "attach2");
        for (const Letter& l : w.letters()) {
            auto it = dim_of.find(l.gen.base);
            if (it == dim_of.end() || it->second != 1 || l.gen.degenerate() ||
                l.gen.base_degree != 0)
                throw ValidationError("attaching word of " + n + " must use 1-cell generators");
        }
    }
    for (const auto& [n, id] : y.attach3) {
        expect(n, 3, "attach3");
        std::vector<Word> relators;
        for (const std::string& r : y.cells_of_dim(2)) {
            auto it = y.attach2.find(r);
            if (it == y.attach2.end())
                throw ValidationError("2-cell " + r + " lacks an attaching word");
            relators.push_back(it->second);
        }
        for (const IdentityTerm& t : id.terms)
            for (const Letter& l : t.conjugator.letters()) {
                auto it = dim_of.find(l.gen.base);
                if (it == dim_of.end() || it->second != 1 || l.gen.degenerate())
                    throw ValidationError("identity conjugator in " + n +
                                          " must use 1-cell generators");
            }
        if (!validate_identity(relators, id))
            throw ValidationError("attaching identity of " + n +
                                  " does not reduce to the trivial element");
    }
    for (const auto& [n, w] : y.attach4) {
        expect(n, 4, "attach4");
        int ell = static_cast<int>(y.cells_of_dim(2).size());
        for (const Letter& l : w.letters()) parse_gamma_symbol(l.gen.base, ell);
    }
    for (const auto& [n, w] : y.general_attach) {
        auto it = dim_of.find(n);
        if (it == dim_of.end() || it->second < 5)
            throw ValidationError("general attaching data is for cells of dimension >= 5");
        (void)w;
    }
    for (const std::string& n : y.cells_of_dim(2))
        if (!y.attach2.count(n)) throw ValidationError("2-cell " + n + " lacks attaching data");
    for (const std::string& n : y.cells_of_dim(3))
        if (!y.attach3.count(n)) throw ValidationError("3-cell " + n + " lacks attaching data");
    for (const std::string& n : y.cells_of_dim(4))
        if (!y.attach4.count(n)) throw ValidationError("4-cell " + n + " lacks attaching data");
    for (const auto& [d, names] : y.cells)
        if (d >= 5)
            for (const std::string& n : names)
                if (!y.general_attach.count(n))
                    throw ValidationError("cell " + n + " lacks attaching data");
}

/**
 * The Kan group of a reduced CW-complex: one free generator of degree q per
 * (q+1)-cell, with the attaching data as last face.  For a 3-cell the
 * identity among relations becomes the degree-1 word
 * (s0 z_1) r_{j_1}^{e_1} (s0 z_1)^-1 ... ; for a 4-cell the symbol word is
 * expanded into degree-2 commutator generators.
 */
inline FreeSimplicialGroup kan_group(const ReducedCWComplex& y, int max_degree = -1) {
    (void)max_degree;  // the presentation is finite; degeneracies are computed on demand
    validate_complex(y);
    FreeSimplicialGroup k;
    int top = y.top_dimension();
    k.nondegen.resize(static_cast<std::size_t>(std::max(top, 1)));
    for (const auto& [d, names] : y.cells)
        for (const std::string& n : names) {
            k.nondegen[static_cast<std::size_t>(d - 1)].push_back(n);
            k.degree_of[n] = d - 1;
        }
    for (const auto& [n, w] : y.attach2) k.attach[n] = w;
    for (const auto& [n, id] : y.attach3) {
        const auto& two = y.cells_of_dim(2);
        Word d2;
        for (const IdentityTerm& t : id.terms) {
            Word conj = degeneracy(0, t.conjugator);
            Word rel = power(word_of(GenRef{two[static_cast<std::size_t>(t.relator - 1)], 1, {}}),
                             t.sign);
            d2 = multiply(d2, multiply(multiply(conj, rel), invert(conj)));
        }
        k.attach[n] = d2;
    }
    for (const auto& [n, w] : y.attach4) k.attach[n] = expand_gamma_word(w, y.cells_of_dim(2));
    for (const auto& [n, w] : y.general_attach) k.attach[n] = w;
    validate_group(k);
    return k;
}

}  // namespace kanloop

#endif  // KANLOOP_CW_HPP
