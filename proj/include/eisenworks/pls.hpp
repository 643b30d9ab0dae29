#pragma once

#include "eisenworks/lie.hpp"
#include "eisenworks/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eisenworks {

// Polynomial over Rational in variables x_1..x_n, exponent vectors as
// keys. The variable count is fixed per value; mixing counts throws.
class MultiPoly {
public:
    MultiPoly() = default; // zero in 0 variables
    explicit MultiPoly(int nvars);
    static MultiPoly constant(const Rational& c, int nvars);
    static MultiPoly variable(int i, int nvars); // x_i, 1-based
    static MultiPoly monomial(const std::vector<int>& exps, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    Rational coefficient(const std::vector<int>& exps) const;
    MultiPoly homogeneous_slice(int degree) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
    friend MultiPoly operator*(const MultiPoly& x, const Rational& c);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& x) { return x * c; }
    friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
        return x.nvars_ == y.nvars_ && x.terms_ == y.terms_;
    }

    // Replaces x_i by the linear form forms[i-1] over new_nvars variables.
    MultiPoly substitute(const std::vector<std::vector<Rational>>& forms,
                         int new_nvars) const;

    std::string to_string() const;

private:
    void add(const std::vector<int>& e, const Rational& c);
    int nvars_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

// A rational function in x_1..x_r given by its numerator over the fixed
// denominator x_1(x_1-x_2)...(x_{r-1}-x_r)x_r; for r = 1 the pattern
// degenerates to the single boundary factor x_1.
struct RatFn {
    int depth = 1;
    MultiPoly numerator; // in depth variables

    bool is_zero() const { return numerator.is_zero(); }
    std::string to_string() const;
};

// The canonical denominator as a list of linear factors (coefficient
// vectors over x_1..x_depth).
std::vector<std::vector<Rational>> denominator_factors(int depth);

// How the leading a-run of a word is treated by rho:
// CollapseLeadingRun maps a^{i0} b ... to the same monomial for every
// i0 (the exponent is simply dropped); RequireLeadingB keeps only the
// words that start with b. The first is the printed formula read
// verbatim; the second is the reading under which the bracket images
// satisfy the double-shuffle equations (see check_lds).
enum class RhoConvention { CollapseLeadingRun, RequireLeadingB };

// Maps each word a^{i0} b a^{i1} b ... b a^{ir} of b-degree r to the
// monomial x_1^{i1}...x_r^{ir}, extended linearly; words of other
// b-degrees are ignored. Coefficients must be rational. r <= 0 is
// rejected.
RatFn rho_words(const std::map<Word, SvScalar>& words, int r,
                RhoConvention conv = RhoConvention::CollapseLeadingRun);
RatFn rho(const LieElement& x, int r,
          RhoConvention conv = RhoConvention::CollapseLeadingRun);

struct LdsReport {
    // Nonzero residue numerators by equation name; empty means the
    // function satisfies every defining equation of its depth.
    std::vector<std::pair<std::string, MultiPoly>> residues;
    bool passed() const { return residues.empty(); }
};

// Linearized double-shuffle membership test, depths 2 and 3. Each
// defining equation is evaluated as an identity of rational functions:
// substituted denominators are factored, the terms are put over the
// least common denominator, and the summed numerator is the residue.
//   depth 2:  f(x1,x2) + f(x2,x1)  and  f(x1,x12) + f(x2,x12)
//   depth 3:  f(x1,x2,x3) + f(x2,x1,x3) + f(x2,x3,x1)  and
//             f(x1,x12,x123) + f(x2,x12,x123) + f(x2,x23,x123)
// with x_{ij} = x_i + x_j, x_{ijk} = x_i + x_j + x_k.
LdsReport check_lds(const RatFn& f);

} // namespace eisenworks
