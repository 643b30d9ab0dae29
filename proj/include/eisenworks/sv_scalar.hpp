#pragma once

#include "eisenworks/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eisenworks {

// Scalars live in the polynomial ring generated over the rationals by the
// odd zeta values zsv(3), zsv(5), zsv(7), zsv(9), zsv(11) and the weight-11
// depth-3 generator zsv(3,5,3). A monomial is a sorted multiset of tags;
// the tag of zsv(2n+1) is 2n+1 and the tag of zsv(3,5,3) is 353.
using SvMonomial = std::vector<std::uint16_t>;

bool is_sv_generator_tag(std::uint16_t tag);
int sv_tag_weight(std::uint16_t tag);        // 3,5,7,9,11 -> itself; 353 -> 11
std::string sv_tag_name(std::uint16_t tag);  // "zsv3", ..., "zsv353"
std::uint16_t sv_tag_from_name(const std::string& name);

class SvScalar {
  public:
    SvScalar() = default;
    SvScalar(const Rational& r);
    SvScalar(long n);

    static SvScalar generator(std::uint16_t tag);

    SvScalar& operator+=(const SvScalar& o);
    SvScalar& operator-=(const SvScalar& o);
    SvScalar operator+(const SvScalar& o) const;
    SvScalar operator-(const SvScalar& o) const;
    SvScalar operator-() const;
    SvScalar operator*(const SvScalar& o) const;
    SvScalar& operator*=(const SvScalar& o);
    bool operator==(const SvScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const SvScalar& o) const { return terms_ != o.terms_; }

    // division by a nonzero rational; division by a general scalar is not defined
    SvScalar div_rational(const Rational& r) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // the coefficient of the empty monomial (the rational part)
    Rational rational_part() const;
    // throws unless the scalar is purely rational
    Rational as_rational() const;

    // largest total generator weight among monomials, 0 for rational scalars
    int weight() const;

    const std::map<SvMonomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const SvMonomial& m) const;

    std::string to_string() const;

  private:
    void prune();
    std::map<SvMonomial, Rational> terms_;
};

SvScalar operator*(const Rational& r, const SvScalar& s);

// convenience factories: zsv(3), zsv(5), ..., zsv353()
SvScalar zsv(int odd_weight);
SvScalar zsv353();

// Numerical evaluation of the generators and of whole scalars.
// precision is the number of correct significant decimal digits requested,
// at most 15; throws std::invalid_argument beyond that.
double sv_generator_value(std::uint16_t tag, int precision);
double sv_eval(const SvScalar& s, int precision);

} // namespace eisenworks
