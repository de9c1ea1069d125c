// Free-group words over degeneracy-indexed generators: reduction, group
// operations, homomorphic evaluation, abelianization, and a textual syntax.

#ifndef KANLOOP_WORD_HPP
#define KANLOOP_WORD_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kanloop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Letters of different simplicial degree in one word, or an operator index
// out of range.
struct DegreeError : Error {
    using Error::Error;
};

// A generator without an image under a substitution/evaluation.
struct UnboundGeneratorError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Structural data that fails its invariant (complexes, identities, points).
struct ValidationError : Error {
    using Error::Error;
};

// Numerical data off its group manifold, non-closed loops, steps too coarse.
struct NumericError : Error {
    using Error::Error;
};

/**
 * A free generator: a base generator together with a canonical degeneracy
 * prefix.  The prefix lists operator indices outermost first and is kept
 * strictly decreasing, so {prefix = {2,0}, base = "r"} stands for s2 s0 r.
 * Uniqueness of this normal form makes equality structural.
 */
struct GenRef {
    std::string base;
    int base_degree = 0;
    std::vector<int> prefix;

    int degree() const { return base_degree + static_cast<int>(prefix.size()); }
    bool degenerate() const { return !prefix.empty(); }

    friend auto operator<=>(const GenRef&, const GenRef&) = default;
};

// Checks the canonical-form invariant: strictly decreasing entries, each
// index valid at its point of application (innermost entry applies to the
// base generator first).
inline void validate_genref(const GenRef& g) {
    if (g.base.empty())
        throw ValidationError("generator with empty base name");
    if (g.base_degree < 0)
        throw ValidationError("generator with negative degree: " + g.base);
    const auto& p = g.prefix;
    for (std::size_t t = 0; t < p.size(); ++t) {
        // entry p[size-1-t] is applied t steps above the base
        int entry = p[p.size() - 1 - t];
        if (entry < 0 || entry > g.base_degree + static_cast<int>(t))
            throw ValidationError("degeneracy index out of range on " + g.base);
        if (t + 1 < p.size() && p[p.size() - 2 - t] <= entry)
            throw ValidationError("degeneracy prefix not strictly decreasing on " + g.base);
    }
}

// Applies s_i to a canonical generator, renormalizing with
// s_i s_j = s_{j+1} s_i (i <= j).  Entries >= i are bumped, then i is
// inserted in its sorted position.
inline GenRef degeneracy_gen(int i, GenRef g) {
    if (i < 0 || i > g.degree())
        throw DegreeError("degeneracy index " + std::to_string(i) + " out of range in degree " +
                          std::to_string(g.degree()));
    auto& p = g.prefix;
    std::size_t pos = 0;
    while (pos < p.size() && i <= p[pos]) {
        ++p[pos];
        ++pos;
    }
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(pos), i);
    return g;
}

struct Letter {
    GenRef gen;
    int sign = +1;  // +1 or -1

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/**
 * A reduced word in free generators.  Words are reduced on construction and
 * stay reduced, so equality is structural.  The empty word is the neutral
 * element and is degree-polymorphic.
 */
class Word {
  public:
    Word() = default;

    explicit Word(std::vector<Letter> raw) {
        check_degrees(raw);
        for (Letter& l : raw) push_reduced(std::move(l));
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    // nullopt for the empty word
    std::optional<int> degree() const {
        if (letters_.empty()) return std::nullopt;
        return letters_.front().gen.degree();
    }

    friend auto operator<=>(const Word&, const Word&) = default;

    // Appends a letter maintaining reducedness; degree consistency is the
    // caller's concern.
    void push_reduced(Letter l) {
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(std::move(l));
    }

  private:
    static void check_degrees(const std::vector<Letter>& raw) {
        for (const Letter& l : raw) {
            if (l.sign != 1 && l.sign != -1) throw ValidationError("letter sign must be +1 or -1");
            if (!raw.empty() && l.gen.degree() != raw.front().gen.degree())
                throw DegreeError("mixed-degree letters in one word");
        }
    }

    std::vector<Letter> letters_;
};

// Free-group normal form of a raw letter sequence.
inline Word reduce(std::vector<Letter> raw) { return Word(std::move(raw)); }

inline void require_same_degree(const Word& a, const Word& b) {
    if (a.degree() && b.degree() && *a.degree() != *b.degree())
        throw DegreeError("words of different degree");
}

inline Word multiply(const Word& a, const Word& b) {
    require_same_degree(a, b);
    Word out = a;
    for (const Letter& l : b.letters()) out.push_reduced(l);
    return out;
}

inline Word invert(const Word& a) {
    Word out;
    const auto& ls = a.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_reduced(Letter{it->gen, -it->sign});
    return out;
}

inline Word commutator(const Word& a, const Word& b) {
    return multiply(multiply(a, b), multiply(invert(a), invert(b)));
}

inline Word power(const Word& a, int k) {
    Word out;
    Word base = k < 0 ? invert(a) : a;
    for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base);
    return out;
}

inline Word word_of(GenRef g, int sign = +1) { return Word({Letter{std::move(g), sign}}); }

/**
 * Folds a word through any group-like target.  `image` maps a GenRef to a
 * value, `mul`/`inv` give the target operations, `unit` its neutral element.
 */
template <class T, class Image, class Mul, class Inv>
T fold_word(const Word& w, T unit, Image&& image, Mul&& mul, Inv&& inv) {
    T acc = std::move(unit);
    for (const Letter& l : w.letters()) {
        T v = image(l.gen);
        if (l.sign < 0) v = inv(std::move(v));
        acc = mul(std::move(acc), std::move(v));
    }
    return acc;
}

// Homomorphic substitution into the free group: every generator of `w` must
// have an image.
inline Word substitute(const Word& w, const std::map<GenRef, Word>& images) {
    return fold_word<Word>(
        w, Word{},
        [&](const GenRef& g) -> const Word& {
            auto it = images.find(g);
            if (it == images.end()) throw UnboundGeneratorError("no image for generator " + g.base);
            return it->second;
        },
        [](Word a, const Word& b) { return multiply(a, b); }, [](const Word& a) { return invert(a); });
}

// Abelianization: signed exponent count per generator (zeros omitted).
inline std::map<GenRef, long long> exponent_vector(const Word& w) {
    std::map<GenRef, long long> out;
    for (const Letter& l : w.letters()) {
        long long& e = out[l.gen];
        e += l.sign;
        if (e == 0) out.erase(l.gen);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Textual syntax: `x1*y1*x1^-1*y1^-1`, degeneracies as `s1.s0.x1`, identity
// as `e`.  Parser and printer round-trip on canonical forms.
// ---------------------------------------------------------------------------

inline std::string to_string(const GenRef& g) {
    std::string out;
    for (int j : g.prefix) {
        out += 's';
        out += std::to_string(j);
        out += '.';
    }
    out += g.base;
    return out;
}

inline std::string to_string(const Word& w) {
    if (w.is_identity()) return "e";
    std::string out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t run = i + 1;
        while (run < ls.size() && ls[run].gen == ls[i].gen && ls[run].sign == ls[i].sign) ++run;
        if (!out.empty()) out += '*';
        out += to_string(ls[i].gen);
        long long exp = static_cast<long long>(run - i) * ls[i].sign;
        if (exp != 1) out += '^' + std::to_string(exp);
        i = run;
    }
    return out;
}

using DegreeResolver = std::function<int(const std::string&)>;

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& k) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
}

inline bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::string parse_name(std::string_view s, std::size_t& k) {
    std::size_t start = k;
    if (k >= s.size() || (!std::isalpha(static_cast<unsigned char>(s[k])) && s[k] != '_'))
        throw ParseError("expected generator name at position " + std::to_string(k));
    while (k < s.size() && name_char(s[k])) ++k;
    return std::string(s.substr(start, k - start));
}

inline long long parse_int(std::string_view s, std::size_t& k) {
    std::size_t start = k;
    if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == start || (k == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("expected integer at position " + std::to_string(start));
    return std::stoll(std::string(s.substr(start, k - start)));
}

}  // namespace detail

/**
 * Parses the textual word syntax.  `base_degree` resolves the simplicial
 * degree of each base generator name; degeneracy prefixes are renormalized
 * to canonical form.
 */
inline Word parse_word(std::string_view text, const DegreeResolver& base_degree) {
    std::size_t k = 0;
    detail::skip_ws(text, k);
    if (k < text.size() && text[k] == 'e' &&
        (k + 1 == text.size() || !detail::name_char(text[k + 1]))) {
        std::size_t j = k + 1;
        detail::skip_ws(text, j);
        if (j == text.size()) return Word{};
    }
    std::vector<Letter> letters;
    bool first = true;
    while (true) {
        detail::skip_ws(text, k);
        if (k == text.size()) {
            if (first) return Word{};
            throw ParseError("trailing '*' in word");
        }
        // degeneracy prefix entries, innermost last in the text
        std::vector<int> ops;
        std::string name;
        while (true) {
            std::size_t save = k;
            std::string tok = detail::parse_name(text, k);
            if (tok.size() >= 2 && tok[0] == 's' && k < text.size() && text[k] == '.' &&
                std::all_of(tok.begin() + 1, tok.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                ops.push_back(std::stoi(tok.substr(1)));
                ++k;  // consume '.'
                continue;
            }
            k = save;
            name = detail::parse_name(text, k);
            break;
        }
        if (name == "e") throw ParseError("'e' is reserved for the identity word");
        GenRef g{name, base_degree(name), {}};
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) g = degeneracy_gen(*it, std::move(g));
        long long exp = 1;
        detail::skip_ws(text, k);
        if (k < text.size() && text[k] == '^') {
            ++k;
            detail::skip_ws(text, k);
            exp = detail::parse_int(text, k);
        }
        int sign = exp < 0 ? -1 : +1;
        for (long long i = 0; i < std::abs(exp); ++i) letters.push_back(Letter{g, sign});
        first = false;
        detail::skip_ws(text, k);
        if (k == text.size()) break;
        if (text[k] != '*') throw ParseError("expected '*' at position " + std::to_string(k));
        ++k;
    }
    return Word(std::move(letters));
}

// Convenience overload for contexts where every base generator has degree 0.
inline Word parse_word(std::string_view text) {
    return parse_word(text, [](const std::string&) { return 0; });
}

}  // namespace kanloop

#endif  // KANLOOP_WORD_HPP
