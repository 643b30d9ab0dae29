#pragma once

#include "eisenworks/biseries.hpp"
#include "eisenworks/hollog.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace eisenworks {

// Thrown when an expansion keeps a genuine dependence on log q - log qbar,
// i.e. it is not invariant under shifting z by 1 and so cannot be written
// in L alone. Doubles as a modularity test for constructed expansions.
struct NonModularResidue : std::runtime_error {
    explicit NonModularResidue(const std::string& what)
        : std::runtime_error(what) {}
};

// Staging expansions in q, qbar whose coefficients are polynomials in
// log q and log qbar (and Laurent in L). Internally the log-monomials are
// rewritten over the basis {L^a D^b} with D = log q - log qbar, using
// log q = L + D/2 and log qbar = L - D/2, so testing T-invariance is a
// sparsity check on b.
class ExtendedSeries {
  public:
    ExtendedSeries(int r, int s, long trunc);

    int weight_r() const { return r_; }
    int weight_s() const { return s_; }
    long trunc() const { return trunc_; }

    // key: (a, b, m, n) for L^a D^b q^m qbar^n
    void add_term(int a, int b, long m, long n, const SvScalar& c);
    SvScalar coefficient(int a, int b, long m, long n) const;
    const std::map<std::tuple<int, int, long, long>, SvScalar>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    ExtendedSeries operator+(const ExtendedSeries& o) const;
    ExtendedSeries operator-(const ExtendedSeries& o) const;
    ExtendedSeries operator-() const;
    ExtendedSeries operator*(const ExtendedSeries& o) const;
    ExtendedSeries operator*(const SvScalar& c) const;
    bool operator==(const ExtendedSeries& o) const;
    bool operator!=(const ExtendedSeries& o) const { return !(*this == o); }

    // same data under reassigned bookkeeping weights
    ExtendedSeries with_weights(int r, int s) const;

    std::string to_string() const;

    // q^m (log q)^j contributions, log q -> L + D/2
    static ExtendedSeries from_hol(const HolLogSeries& h, int r, int s);
    // the mirror: qbar^n (log qbar)^j with log qbar -> L - D/2
    static ExtendedSeries from_hol_conjugate(const HolLogSeries& h, int r,
                                             int s);
    static ExtendedSeries from_biseries(const BiSeries& f);
    static ExtendedSeries log_q(int r, int s, long trunc);
    static ExtendedSeries log_qbar(int r, int s, long trunc);
    static ExtendedSeries L_power(int a, int r, int s, long trunc);
    static ExtendedSeries constant(const SvScalar& c, int r, int s,
                                   long trunc);

  private:
    int r_, s_;
    long trunc_;
    std::map<std::tuple<int, int, long, long>, SvScalar> terms_;
};

// Checks that no D-dependence survives and repackages the expansion as a
// BiSeries; throws NonModularResidue otherwise.
BiSeries reduce_to_L(const ExtendedSeries& f);

} // namespace eisenworks
