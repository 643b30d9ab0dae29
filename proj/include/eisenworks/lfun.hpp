#pragma once

#include "eisenworks/biseries.hpp"
#include "eisenworks/rational.hpp"
#include "eisenworks/sv_scalar.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace eisenworks {

// Dirichlet data of a truncated expansion: for every L-exponent k the
// stream c^(k)(l) = sum_{m+n=l} a^(k)_{m,n} over l = 1..terms. Constant
// modes (l = 0) are excluded; the regularised transform drops them.
struct LSeriesData {
    int alpha = 0; // declared modular weights of the source
    int beta = 0;
    long terms = 0;
    // band k -> per-mode coefficients indexed by l; entry [0] stays zero
    std::map<int, std::vector<SvScalar>> bands;
};

// Streams of an arbitrary series. terms must not exceed the source
// truncation (the data would silently be wrong beyond it).
LSeriesData dirichlet_data(const BiSeries& f, long terms);

// Closed-form streams for component (r,s) of the weight-w real-analytic
// Eisenstein vector, assembled mode by mode from eis_pure_mode_chain.
// Cheap enough for cutoffs around 10^5 where materialising the whole
// series as a BiSeries would not be.
LSeriesData eis_dirichlet_data(int w, int r, int s, long terms);

struct LambdaValue {
    std::complex<double> value{0.0, 0.0};
    // bound on the dropped tail, from the divisor-sum growth model
    // |c^(k)(l)| <= C_k l^(alpha+beta+k) with C_k read off the computed
    // range and doubled for safety
    double tail_bound = 0.0;
};

// Completed value by direct summation of the regularised transform,
//   sum_k (-1)^k (2 pi)^(-s) Gamma(s+k) sum_{l<=terms} c^(k)(l) l^(-(s+k)).
// Requires Re(s) >= alpha + beta + 3 (and Re(s) + k_min > 0 so every
// band's integral representation converges); out-of-regime s throws
// std::invalid_argument. There is no analytic continuation here, and the
// functional equation is never evaluated numerically: both sides rarely
// sit in the convergent regime at once, so the closed-form identities it
// implies are what the tests check. Summation is sequential and
// compensated, so results are deterministic for identical inputs.
LambdaValue lambda_completed(const LSeriesData& data, std::complex<double> s);
LambdaValue lambda_completed(const BiSeries& f, std::complex<double> s,
                             long terms);

// Gamma/zeta closed forms used as the reference route. Every Dirichlet
// band of an Eisenstein-vector component collapses to zeta(x+1) zeta(x-w)
// because its mode coefficients are pure powers of 1/l times
// sigma_{w+1}(l); the remaining factor is an exact rational combination
// of Gamma values read off the l = 1 chain.
std::complex<double> lambda_eis_closed_form(int w, int r, int s,
                                            std::complex<double> x);
// (2 pi)^(-x) Gamma(x) zeta(x) zeta(x - k + 1) for the weight-k
// holomorphic Eisenstein series.
std::complex<double> lambda_g_closed_form(int k, std::complex<double> x);

struct DLambdaReport {
    std::vector<std::string> residues; // one line per mode with leftovers
    bool passed() const { return residues.empty(); }
};

// Formal residue of the differential identity for completed values: with
// g = raise(f) + lower(f) at matching cutoffs, the combination
// Lambda(g; s) + (2s - w) Lambda(f; s) must vanish identically in s.
// Per mode l, every band is rewritten over the common basis
// Gamma(s + k_min) l^(-(s + k_min)) via Gamma(s+k+1) = (s+k) Gamma(s+k),
// and the resulting polynomial in formal s must cancel exactly. The
// low-level entry takes the two stream families separately so that a
// deliberately corrupted derivative stream is detectable.
DLambdaReport dlambda_residue(const LSeriesData& f, const LSeriesData& g,
                              int w);
DLambdaReport verify_dlambda_identity(const BiSeries& f);

// Exact determinant of the (w+1) x (w+1) tridiagonal matrix with constant
// diagonal 2s - w, superdiagonal 1, 2, ..., w and subdiagonal w, ..., 1,
// returned as a dense polynomial in s (ascending coefficients). w must be
// even and nonnegative.
std::vector<Rational> det_Mw(int w);

// pi^(-s/2) Gamma(s/2) zeta(s): the symmetric completion of zeta without
// the s(s-1)/2 polynomial prefactor, so xi(s) = xi(1-s).
double xi_completed(double s);

struct XiReport {
    double lhs = 0.0; // (-4 pi)^k times the summed completed value
    double rhs = 0.0; // ((2k-1)!/(k-1)!) xi(s+1) xi(s-2k)
    double rel_discrepancy = 0.0;
    double tail_bound = 0.0; // tail bound of the summed side, rescaled
};

// Numeric comparison of (-4 pi)^k Lambda at the diagonal component (k,k)
// of the weight-2k Eisenstein vector against the xi product above. Only
// k = 1 is within summing reach here; s must sit in the convergent
// regime of the diagonal component.
XiReport xi_identity_check(int k, double s, long terms = 100000);

} // namespace eisenworks
