#pragma once

#include <complex>
#include <cstdint>

namespace eisenworks {

// Riemann zeta via Euler-Maclaurin. Valid away from s = 1; accurate to
// roughly 1e-14 relative error for Re(s) > -10 or so, which covers every
// use in this project.
std::complex<double> zeta(std::complex<double> s);
double zeta(double s);

// Gamma via the Lanczos approximation (g = 7, 9 terms), reflection for
// Re(z) < 1/2. Relative error around 1e-13 on the strips we use.
std::complex<double> gamma_fn(std::complex<double> z);
double gamma_fn(double x);
std::complex<double> log_gamma(std::complex<double> z);

// Multiple zeta values, convention
//   mzv(s1,...,sr) = sum over m1 > m2 > ... > mr >= 1 of m1^-s1 ... mr^-sr,
// computed with prefix sums plus an analytic tail estimate for the
// outermost sum. All exponents must be >= 2 here (that keeps the tail
// estimate valid and covers every value this project needs).
double mzv_depth2(int s1, int s2);
double mzv_depth3(int s1, int s2, int s3);

} // namespace eisenworks
