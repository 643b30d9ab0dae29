#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace eisenworks {

// Exact arithmetic backends. cpp_rational keeps the canonical form we rely on
// everywhere: positive denominator, gcd(num, den) = 1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(long n, long k);
BigInt factorial(long n);

// n-th Bernoulli number with the B_1 = -1/2 convention. Values are cached;
// computed by the recurrence sum_{j<m} C(m+1,j) B_j = -(m+1) B_m.
const Rational& bernoulli(long n);

// sigma_k(n) = sum of k-th powers of the divisors of n, n >= 1.
BigInt divisor_sigma(long k, long long n);

// "p/q" (or "p" when q == 1); parser accepts both forms and rejects q == 0.
std::string to_fraction_string(const Rational& r);
Rational rational_from_string(const std::string& s);

double to_double(const Rational& r);

} // namespace eisenworks
