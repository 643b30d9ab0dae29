#pragma once

#include "eisenworks/sv_scalar.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace eisenworks {

// A word in the two-letter alphabet {a,b}, packed into a machine word.
// Bit (len-1-i) holds letter i, so words of equal length compare
// lexicographically when compared numerically (a = 0 < b = 1).
struct Word {
    std::uint64_t bits = 0;
    int len = 0;

    static Word letter_a() { return {0, 1}; }
    static Word letter_b() { return {1, 1}; }
    static Word from_string(const std::string& s);

    int letter(int i) const { return int((bits >> (len - 1 - i)) & 1u); }
    int count_b() const;
    int count_a() const { return len - count_b(); }
    std::pair<int, int> bidegree() const { return {count_a(), count_b()}; }
    std::string to_string() const;

    friend Word concat(const Word& u, const Word& v) {
        if (u.len + v.len > 63)
            throw std::length_error("word too long");
        return {(u.bits << v.len) | v.bits, u.len + v.len};
    }
    friend bool operator==(const Word& u, const Word& v) {
        return u.len == v.len && u.bits == v.bits;
    }
    friend bool operator<(const Word& u, const Word& v) {
        return u.len != v.len ? u.len < v.len : u.bits < v.bits;
    }
};

bool is_lyndon(const Word& w);

// An element of the free Lie algebra on {a,b}. The working representation
// is the expansion in the associative word algebra, which is faithful and
// keeps brackets and derivations cheap; coordinates on the Lyndon basis
// (the bracketing of each Lyndon word by its standard factorisation) are
// recovered on demand.
class LieElement {
public:
    LieElement() = default;

    static LieElement a() { return basis(Word::letter_a()); }
    static LieElement b() { return basis(Word::letter_b()); }
    static LieElement basis(const Word& w);
    // Accepts an expansion in the word algebra; throws
    // std::invalid_argument if it is not a Lie element.
    static LieElement from_word_expansion(const std::map<Word, SvScalar>& t);

    // Expansion in the associative word algebra (the primary form).
    const std::map<Word, SvScalar>& word_expansion() const { return words_; }
    // Coordinates on the Lyndon basis, computed by triangular reduction.
    std::map<Word, SvScalar> lyndon_terms() const;
    SvScalar coefficient(const Word& lyndon_word) const;

    bool is_zero() const { return words_.empty(); }
    bool is_homogeneous() const;
    // (deg_a, deg_b); throws std::domain_error if zero or mixed.
    std::pair<int, int> bidegree() const;
    LieElement homogeneous_slice(int deg_a, int deg_b) const;

    LieElement operator-() const;
    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    friend LieElement operator+(LieElement x, const LieElement& y) { return x += y; }
    friend LieElement operator-(LieElement x, const LieElement& y) { return x -= y; }
    friend LieElement operator*(const LieElement& x, const SvScalar& c);
    friend LieElement operator*(const SvScalar& c, const LieElement& x) { return x * c; }
    friend bool operator==(const LieElement& x, const LieElement& y) {
        return x.words_ == y.words_;
    }

    std::string to_string() const;

    friend LieElement bracket(const LieElement& x, const LieElement& y);
    friend LieElement der_apply(const struct DerivationTheta& d, const LieElement& x);

private:
    // For results that are Lie elements by construction.
    static LieElement raw(std::map<Word, SvScalar> m);
    void add(const Word& w, const SvScalar& c);
    std::map<Word, SvScalar> words_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

// A derivation of the free Lie algebra annihilating [a,b], determined by
// its values on the generators.
struct DerivationTheta {
    LieElement on_a;
    LieElement on_b;

    DerivationTheta() = default;
    DerivationTheta(LieElement va, LieElement vb);

    bool is_zero() const { return on_a.is_zero() && on_b.is_zero(); }
    // Bidegree shift (p, q): maps the component of bidegree (r, s) into
    // (r+p, s+q). Requires homogeneity; throws std::domain_error on a
    // zero or inhomogeneous derivation.
    std::pair<int, int> bidegree_shift() const;

    friend bool operator==(const DerivationTheta& d, const DerivationTheta& e) {
        return d.on_a == e.on_a && d.on_b == e.on_b;
    }
};

DerivationTheta operator+(const DerivationTheta& d, const DerivationTheta& e);
DerivationTheta operator-(const DerivationTheta& d, const DerivationTheta& e);
DerivationTheta operator*(const DerivationTheta& d, const SvScalar& c);

LieElement der_apply(const DerivationTheta& d, const LieElement& x);
DerivationTheta der_bracket(const DerivationTheta& d1, const DerivationTheta& d2);

enum class EpsilonVariant { Dual, Lowest };

// The sl2 pair acting on derivations by bracket.
DerivationTheta epsilon0();       // sends b to -a
DerivationTheta epsilon0_dual();  // sends a to b

// The derivation of even index 2n+2 >= 2: the dual variant sends a to
// ad(a)^{2n+2} b, the lowest variant is its conjugate under the
// substitution (a,b) -> (-b,a).
DerivationTheta epsilon(int index, EpsilonVariant variant);

// The full sl2 orbit {ad(epsilon0)^i epsilon(index, lowest)}, of size
// index - 1.
std::vector<DerivationTheta> epsilon_string(int index);

struct RankResult {
    int rank = 0;
    // Exact rational relations among the inputs, one vector per kernel
    // basis element, normalised to coprime integers with positive lead.
    std::vector<std::vector<Rational>> kernel;
};

RankResult rank_of_span(const std::vector<DerivationTheta>& ds);

struct DimensionCell {
    int formal_count = 0;
    int rank = 0;
};

struct DimensionTable {
    // Keyed by (bracket length, shift_a, shift_b) of the derivations.
    std::map<std::tuple<int, int, int>, DimensionCell> cells;
};

// Ranks of the spans of all fixed-length brackets of sl2-orbit elements
// of the epsilon family, grouped by bidegree shift. Weight of a cell is
// shift_a + shift_b; only cells of weight <= max_weight are produced.
DimensionTable dimension_table(int max_bracket_length, int max_weight);

} // namespace eisenworks
