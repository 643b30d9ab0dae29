#pragma once

#include "eisenworks/sv_scalar.hpp"

#include <map>
#include <string>
#include <tuple>

namespace eisenworks {

enum class MaassDir { Raise, Lower };

// Truncated expansion sum_k L^k sum_{m,n} a^(k)_{m,n} q^m qbar^n with
// declared modular weights (r,s) and L = log|q|. Coefficients are exact
// scalars; the L-exponent k may be negative.
class BiSeries {
  public:
    BiSeries(int r, int s, long trunc);

    int weight_r() const { return r_; }
    int weight_s() const { return s_; }
    long trunc() const { return trunc_; }

    void add_term(int k, long m, long n, const SvScalar& c);
    SvScalar coefficient(int k, long m, long n) const;
    const std::map<std::tuple<int, long, long>, SvScalar>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    BiSeries operator+(const BiSeries& o) const;
    BiSeries operator-(const BiSeries& o) const;
    BiSeries operator-() const;
    BiSeries operator*(const SvScalar& c) const;
    bool operator==(const BiSeries& o) const;
    bool operator!=(const BiSeries& o) const { return !(*this == o); }

    // same coefficients at reassigned weights (the weight of a series like
    // L^k is contextual; see the Laplacian eigenvalue checks)
    BiSeries with_weights(int r, int s) const;

    // swap q and qbar, swap declared weights
    BiSeries conjugate() const;

    // order of the pole in L (0 for L-polynomial series)
    int pole_order() const;
    bool in_pole_filtration(int a) const;

    std::string to_string() const;

    static BiSeries monomial(int k, long m, long n, int r, int s, long trunc,
                             const SvScalar& c = SvScalar(1));
    static BiSeries L_power(int k, long trunc); // weights (-k, -k)

  private:
    int r_, s_;
    long trunc_;
    std::map<std::tuple<int, long, long>, SvScalar> terms_;
};

// Holomorphic Eisenstein series -B_k/2k + sum sigma_{k-1}(m) q^m as a
// weight-(k, 0) series.
BiSeries eisenstein_q(int k, long trunc);

// Raising / lowering operator on coefficients:
//   raise: (r,s) -> (r+1,s-1), b^(k) = (k+r) a^(k) + 2m a^(k-1)
//   lower: (r,s) -> (r-1,s+1), c^(k) = (k+s) a^(k) + 2n a^(k-1)
BiSeries maass(const BiSeries& f, MaassDir dir);

// -lower(raise f) + r(s-1) f. Computes the mirror formula
// -raise(lower f) + s(r-1) f as well and insists they agree.
BiSeries laplacian(const BiSeries& f);

// weights add, coefficients convolve, truncation drops to the minimum
BiSeries multiply(const BiSeries& f, const BiSeries& g);

} // namespace eisenworks
