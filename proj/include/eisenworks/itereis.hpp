#pragma once

#include "eisenworks/hollog.hpp"
#include "eisenworks/lie.hpp"
#include "eisenworks/raeis.hpp"
#include "eisenworks/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eisenworks {

// Letter of the expansion alphabet: the symbol of even weight 2n+2 paired
// with the monomial X^(2n-m) Y^m, stored as (weight, m). The symbol carries
// M-degree -1 and every power of Y lowers it by one more.
struct EisLetter {
    int weight;  // even, >= 4
    int m;       // 0 <= m <= weight - 2

    auto operator<=>(const EisLetter&) const = default;
    std::string to_string() const;
};

// Letter of the bracket alphabet: ad(-eps0)^depth applied to the
// lowest-weight generator of the given even weight. Depths beyond
// weight - 2 vanish in the derivation model, so valid letters satisfy
// depth <= weight - 2. M-degree is -1 - depth.
struct EpsLetter {
    int weight;
    int depth;

    auto operator<=>(const EpsLetter&) const = default;
    std::string to_string() const;
};

int m_degree(const EisLetter& l);
int m_degree(const EpsLetter& l);

template <class Letter>
int m_degree(const std::vector<Letter>& word) {
    int d = 0;
    for (const auto& l : word) d += m_degree(l);
    return d;
}

// A series over words in Letter with HolLogSeries coefficients, truncated
// at q-order trunc. When conjugated is set the stored coefficients are to
// be read in the variables (qbar, log qbar); the data itself is never
// rewritten, which keeps the twist below an involution on the nose.
template <class Letter>
class GroupSeries {
  public:
    explicit GroupSeries(long trunc, bool conjugated = false)
        : trunc_(trunc), conjugated_(conjugated) {}

    long trunc() const { return trunc_; }
    bool conjugated() const { return conjugated_; }

    void set_coefficient(const std::vector<Letter>& word, HolLogSeries c) {
        coeffs_.insert_or_assign(word, std::move(c));
    }
    // zero for words that were never stored
    HolLogSeries coefficient(const std::vector<Letter>& word) const {
        auto it = coeffs_.find(word);
        return it == coeffs_.end() ? HolLogSeries(trunc_) : it->second;
    }
    const std::map<std::vector<Letter>, HolLogSeries>& coefficients() const {
        return coeffs_;
    }
    int max_length() const {
        int len = 0;
        for (const auto& [w, c] : coeffs_)
            len = std::max(len, static_cast<int>(w.size()));
        return len;
    }

  private:
    long trunc_;
    bool conjugated_;
    std::map<std::vector<Letter>, HolLogSeries> coeffs_;
};

struct CheckReport {
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

// Generating series of regularized iterated integrals of
// G_{2n+2}(q) (X - log q Y)^(2n) dq/q, letters adjoined on the left:
//   coeff(empty) = 1
//   coeff(Lw)    = -reg_primitive(form_L * coeff(w))
// with form_(2n+2,m) = C(2n,m) (-log q)^m G_{2n+2}(q). The recursion plus
// the vanishing of every regularized constant pins each coefficient
// uniquely; group-likeness is then a consequence and is checked separately
// by shuffle_check. maxlen is capped at 3 to bound the combinatorics;
// maxweight must be even.
GroupSeries<EisLetter> build_I(int maxlen, int maxweight, long trunc);

// Shuffle relations on letters: coeff(u) coeff(v) must equal
// coeff(uv) + coeff(vu) for every pair of letters present at length one,
// and the empty word must carry 1. Requires a series built to length >= 2.
CheckReport shuffle_check(const GroupSeries<EisLetter>& I);

// Letterwise change of alphabet sending the (weight, m) expansion letter to
// (2/(2n)!) ((2n-m)!/(2n)!) times the (weight, depth=m) bracket letter,
// where 2n = weight - 2. The X^(2n) letter goes to (2/(2n)!) times the
// depth-zero letter and each extra Y matches one application of ad(-eps0).
// Letters with m > 2n would map to zero; words containing one are dropped.
GroupSeries<EpsLetter> mu_map(const GroupSeries<EisLetter>& I);

// Differential equation satisfied by J = mu_map(build_I(...)), checked
// with the leading letter split off: for every stored nonempty word
// w = (weight, depth) t, writing 2n = weight - 2,
//   q d/dq coeff(w) + (2/(2n)!) ((-log q)^depth / depth!) G_{2n+2} coeff(t)
// must vanish exactly on the truncation, and the empty-word coefficient
// must be constant. The left factor is rebuilt here from fresh Eisenstein
// expansions and series products, never from the primitives the
// construction used, so the comparison crosses two independent pipelines.
// trunc must equal J.trunc(); passing it names the order being certified.
CheckReport verify_dJ(const GroupSeries<EpsLetter>& J, long trunc);

// Conjugate the coefficient variables (toggling the flag) and scale every
// word by (-1) to its M-degree. Applying the twist twice returns the input.
template <class Letter>
GroupSeries<Letter> sv_twist(const GroupSeries<Letter>& G) {
    GroupSeries<Letter> out(G.trunc(), !G.conjugated());
    for (const auto& [word, c] : G.coefficients()) {
        bool odd = m_degree(word) % 2 != 0;
        out.set_coefficient(word, odd ? -c : c);
    }
    return out;
}

// Length-one piece of the equivariant combination at total weight w: the
// single-letter coefficients of J minus those of sv_twist(J), with the
// zsv(w+1) multiple of the dual generator subtracted at top depth, pulled
// back to X,Y monomials and converted to the U,V component basis. The
// conversion throws NonModularResidue if any log q - log qbar dependence
// survives, so returning at all is already the equivariance test. The
// result must be a single scalar multiple of build_real_eisenstein(w,
// trunc); that scalar is measured and returned with the family, and
// InconsistentSystem is thrown if no single exact scalar works.
struct JeqvLengthOne {
    VectorModularForm family;
    SvScalar scalar;
};

JeqvLengthOne jeqv_length1(int w, long trunc);

// Depth-zero letters weighted by B_{2n+2}/(4n+4) * 2/(2n)!, the unipotent
// part of the logarithm of the local monodromy. Recorded for inertia
// bookkeeping; nothing downstream consumes it yet.
std::map<EpsLetter, Rational> n_plus(int maxweight);

// Bridge into the derivation model: the bracket letter as an explicit
// derivation, ad(-eps0)^depth of the lowest-weight generator. Zero once
// depth exceeds weight - 2.
DerivationTheta eps_letter_value(const EpsLetter& l);

// A word acts by composing letter values, leftmost letter outermost.
LieElement eval_word(const std::vector<EpsLetter>& word, const LieElement& x);

} // namespace eisenworks
