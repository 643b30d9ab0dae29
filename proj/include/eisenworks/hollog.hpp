#pragma once

#include "eisenworks/sv_scalar.hpp"

#include <map>
#include <string>
#include <utility>

namespace eisenworks {

// Truncated series in q whose coefficients are polynomials in log q:
// sum of c_{i,j} q^i (log q)^j with 0 <= i <= trunc and finitely many j.
class HolLogSeries {
  public:
    explicit HolLogSeries(long trunc);

    long trunc() const { return trunc_; }
    int log_degree() const;

    void add_term(long i, int j, const SvScalar& c);
    SvScalar coefficient(long i, int j) const;
    const std::map<std::pair<long, int>, SvScalar>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    HolLogSeries operator+(const HolLogSeries& o) const;
    HolLogSeries operator-(const HolLogSeries& o) const;
    HolLogSeries operator*(const HolLogSeries& o) const;
    HolLogSeries operator*(const SvScalar& c) const;
    HolLogSeries operator-() const;
    bool operator==(const HolLogSeries& o) const;
    bool operator!=(const HolLogSeries& o) const { return !(*this == o); }

    // q d/dq, equivalently d/d(log q)
    HolLogSeries log_derivative() const;

    std::string to_string() const;

    static HolLogSeries one(long trunc);
    static HolLogSeries monomial(long i, int j, long trunc,
                                 const SvScalar& c = SvScalar(1));

  private:
    long trunc_;
    std::map<std::pair<long, int>, SvScalar> terms_;
};

// Primitive H of h with respect to q^-1 dq, regularized at the tangential
// base point: constant modes c (log q)^j pick up (log q)^(j+1)/(j+1) and
// positive modes integrate by parts with no q^0 constant. Satisfies
// H.log_derivative() == h on the truncation.
HolLogSeries reg_primitive(const HolLogSeries& h);

} // namespace eisenworks
