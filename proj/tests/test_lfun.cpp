#include "doctest.h"

#include "eisenworks/biseries.hpp"
#include "eisenworks/itereis.hpp"
#include "eisenworks/lfun.hpp"
#include "eisenworks/numerics.hpp"
#include "eisenworks/raeis.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace eisenworks;

namespace {

const double kPi = 3.141592653589793238462643383279;
// frozen reference constants, correct to the last printed digit
const double kZeta5 = 1.0369277551433699263;
const double kZeta9 = 1.0020083928260822144;

void check_same_streams(const LSeriesData& a, const LSeriesData& b) {
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
    CHECK(a.terms == b.terms);
    REQUIRE(a.bands.size() == b.bands.size());
    for (const auto& [k, va] : a.bands) {
        REQUIRE(b.bands.count(k) == 1);
        const auto& vb = b.bands.at(k);
        REQUIRE(va.size() == vb.size());
        for (size_t i = 0; i < va.size(); ++i) CHECK(va[i] == vb[i]);
    }
}

BiSeries random_series(unsigned seed, int r, int s, long trunc) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> band(-2, 2);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::uniform_int_distribution<long> mode(0, 6);
    std::uniform_int_distribution<int> pick(0, 5);
    BiSeries f(r, s, trunc);
    for (int t = 0; t < 12; ++t) {
        SvScalar c{Rational(num(rng), den(rng))};
        if (pick(rng) == 0) c = c * zsv(3);
        f.add_term(band(rng), mode(rng), mode(rng), c);
    }
    return f;
}

// composite Simpson over [0, top], integrand forced to zero at y = 0
// (every mode integrand vanishes there in the convergent strip)
template <class F>
double simpson(F f, double top, int panels) {
    double h = top / panels;
    double acc = 0.0;
    for (int i = 1; i < panels; ++i)
        acc += f(i * h) * ((i % 2 != 0) ? 4.0 : 2.0);
    acc += f(top);
    return acc * h / 3.0;
}

} // namespace

TEST_CASE("dirichlet streams collect modes by total order") {
    BiSeries f(1, 1, 6);
    f.add_term(0, 0, 0, SvScalar(11)); // constant mode, must be dropped
    f.add_term(0, 1, 0, SvScalar(3));
    f.add_term(0, 0, 1, SvScalar(5));
    f.add_term(0, 1, 1, SvScalar(7));
    f.add_term(-1, 2, 1, zsv(3));
    LSeriesData d = dirichlet_data(f, 6);
    CHECK(d.alpha == 1);
    CHECK(d.beta == 1);
    CHECK(d.terms == 6);
    REQUIRE(d.bands.size() == 2);
    CHECK(d.bands.at(0)[1] == SvScalar(8));
    CHECK(d.bands.at(0)[2] == SvScalar(7));
    CHECK(d.bands.at(0)[3] == SvScalar(0));
    CHECK(d.bands.at(-1)[3] == zsv(3));
    // a shorter cutoff discards the far modes entirely
    LSeriesData d2 = dirichlet_data(f, 2);
    CHECK(d2.bands.count(-1) == 0);
    CHECK(d2.bands.at(0).size() == 3);
}

TEST_CASE("eisenstein streams match the built vector and the integral route") {
    for (int r = 0; r <= 2; ++r) {
        BiSeries comp = build_real_eisenstein(2, 12).component(r, 2 - r);
        check_same_streams(eis_dirichlet_data(2, r, 2 - r, 12),
                           dirichlet_data(comp, 12));
    }
    // independent pipeline: the length-one equivariant family rescaled by
    // -1/2 reproduces the vector, so its streams must agree entry by entry
    JeqvLengthOne j = jeqv_length1(2, 8);
    BiSeries diag = j.family.component(1, 1) * SvScalar(Rational(-1, 2));
    check_same_streams(eis_dirichlet_data(2, 1, 1, 8),
                       dirichlet_data(diag, 8));
}

TEST_CASE("completed value of the weight-4 series matches its closed form") {
    LambdaValue lam = lambda_completed(eisenstein_q(4, 2000), {8.0, 0.0}, 2000);
    double ref = kZeta5 / 480.0; // (2pi)^-8 Gamma(8) zeta(8) zeta(5) exactly
    CHECK(std::abs(lam.value.imag()) < 1e-15);
    CHECK(std::abs(lam.value.real() - ref) < 1e-8);
    CHECK(std::abs(lam.value.real() - ref) < 1e-10 * ref);
    CHECK(lam.tail_bound > 0.0);
    CHECK(lam.tail_bound < 1e-8);
    CHECK(std::abs(lam.value.real() - ref) < lam.tail_bound + 1e-13);

    CHECK(std::abs(lambda_g_closed_form(4, {8.0, 0.0}).real() - ref) <
          1e-12 * ref);
    double ref9 = kZeta9 / (12.0 * kPi * kPi * kPi);
    CHECK(std::abs(lambda_g_closed_form(4, {9.0, 0.0}).real() - ref9) <
          1e-12 * ref9);
}

TEST_CASE("tail bound covers the dropped part at every cutoff") {
    BiSeries g = eisenstein_q(4, 500);
    double exact = kZeta5 / 480.0;
    double last = 1e300;
    for (long cut : {10L, 50L, 500L}) {
        LambdaValue lam = lambda_completed(g, {8.0, 0.0}, cut);
        CHECK(std::abs(lam.value.real() - exact) < lam.tail_bound + 1e-14);
        CHECK(lam.tail_bound < last);
        last = lam.tail_bound;
    }
    double exact11 = -kZeta9 / (288.0 * kPi * kPi);
    for (long cut : {50L, 400L}) {
        LambdaValue lam =
            lambda_completed(eis_dirichlet_data(2, 1, 1, cut), {8.0, 0.0});
        CHECK(std::abs(lam.value.real() - exact11) < lam.tail_bound + 1e-14);
    }
}

TEST_CASE("completed vector components match the printed identities") {
    const long terms = 20000;
    const std::complex<double> s{8.0, 0.0};

    LambdaValue lam20 = lambda_completed(eis_dirichlet_data(2, 2, 0, terms), s);
    double ref20 = 7.0 * kZeta9 / (576.0 * kPi * kPi);
    CHECK(std::abs(lam20.value.real() - ref20) < 1e-6);
    CHECK(std::abs(lam20.value.real() - ref20) < 1e-10 * ref20);
    // the route through the weight-4 holomorphic value at s+1
    std::complex<double> via_g4 =
        ((8.0 - 1.0) * kPi / (8.0 * 6.0)) * lambda_g_closed_form(4, {9.0, 0.0});
    CHECK(std::abs(lam20.value.real() - via_g4.real()) < 1e-9 * ref20);

    LambdaValue lam11 = lambda_completed(eis_dirichlet_data(2, 1, 1, terms), s);
    double ref11 = -kZeta9 / (288.0 * kPi * kPi);
    CHECK(std::abs(lam11.value.real() - ref11) < 1e-6);
    CHECK(std::abs(lam11.value.real() - ref11) < 1e-10 * std::abs(ref11));
    std::complex<double> via_g4_neg =
        (-2.0 * kPi / 48.0) * lambda_g_closed_form(4, {9.0, 0.0});
    CHECK(std::abs(lam11.value.real() - via_g4_neg.real()) <
          1e-9 * std::abs(ref11));

    CHECK(std::abs(lambda_eis_closed_form(2, 2, 0, s).real() - ref20) <
          1e-12 * ref20);
    CHECK(std::abs(lambda_eis_closed_form(2, 1, 1, s).real() - ref11) <
          1e-12 * std::abs(ref11));
    // mirror components share the closed form
    CHECK(lambda_eis_closed_form(2, 0, 2, s) == lambda_eis_closed_form(2, 2, 0, s));
}

TEST_CASE("complex argument agrees with the complex closed form") {
    std::complex<double> s{8.0, 0.5};
    LambdaValue lam = lambda_completed(eisenstein_q(4, 3000), s, 3000);
    std::complex<double> ref = lambda_g_closed_form(4, s);
    CHECK(std::abs(lam.value - ref) < 1e-9 * std::abs(ref));
    CHECK(std::abs(lam.value - ref) < lam.tail_bound + 1e-13);
}

TEST_CASE("empty dirichlet data gives a zero value") {
    BiSeries zero(0, 0, 5);
    LambdaValue lam = lambda_completed(zero, {6.0, 0.0}, 5);
    CHECK(lam.value == std::complex<double>(0.0, 0.0));
    CHECK(lam.tail_bound == 0.0);

    BiSeries constant(0, 0, 5);
    constant.add_term(0, 0, 0, SvScalar(1));
    CHECK(lambda_completed(constant, {6.0, 0.0}, 5).value ==
          std::complex<double>(0.0, 0.0));
}

TEST_CASE("derivative identity residue vanishes formally") {
    CHECK(verify_dlambda_identity(eisenstein_q(4, 30)).passed());
    VectorModularForm E = build_real_eisenstein(2, 15);
    CHECK(verify_dlambda_identity(E.component(2, 0)).passed());
    CHECK(verify_dlambda_identity(E.component(1, 1)).passed());

    BiSeries constant(0, 0, 5);
    constant.add_term(0, 0, 0, SvScalar(1));
    CHECK(verify_dlambda_identity(constant).passed());

    CHECK(verify_dlambda_identity(random_series(7, 0, 0, 6)).passed());
    CHECK(verify_dlambda_identity(random_series(19, 1, 1, 6)).passed());
    CHECK(verify_dlambda_identity(random_series(23, 2, 0, 6)).passed());
    CHECK(verify_dlambda_identity(random_series(41, 3, 1, 6)).passed());
}

TEST_CASE("corrupted derivative streams are reported modewise") {
    BiSeries f = eisenstein_q(4, 12);
    LSeriesData fd = dirichlet_data(f, 12);
    LSeriesData gd = dirichlet_data(maass(f, MaassDir::Raise), 12);
    LSeriesData ld = dirichlet_data(maass(f, MaassDir::Lower), 12);
    for (const auto& [k, stream] : ld.bands) {
        auto& dst = gd.bands[k];
        if (dst.empty()) dst.assign(gd.terms + 1, SvScalar());
        for (size_t i = 0; i < stream.size(); ++i) dst[i] += stream[i];
    }
    CHECK(dlambda_residue(fd, gd, 4).passed());

    LSeriesData bad = gd;
    bad.bands[0][1] += SvScalar(1);
    DLambdaReport rep = dlambda_residue(fd, bad, 4);
    REQUIRE(rep.residues.size() == 1);
    CHECK(rep.residues[0].find("l=1") != std::string::npos);

    bad.bands[1][2] += zsv(3);
    CHECK(dlambda_residue(fd, bad, 4).residues.size() == 2);

    LSeriesData short_f = dirichlet_data(f, 10);
    CHECK_THROWS_AS(dlambda_residue(short_f, gd, 4), std::invalid_argument);
}

TEST_CASE("tridiagonal determinant matches the falling-factorial product") {
    CHECK(det_Mw(0) == std::vector<Rational>{Rational(0), Rational(2)});
    CHECK(det_Mw(2) == std::vector<Rational>{Rational(0), Rational(16),
                                             Rational(-24), Rational(8)});
    for (int w = 0; w <= 10; w += 2) {
        // 2^(w+1) s (s-1) ... (s-w) by naive convolution
        std::vector<Rational> ref{Rational(BigInt(1) << (w + 1))};
        for (int j = 0; j <= w; ++j) {
            std::vector<Rational> next(ref.size() + 1);
            for (size_t i = 0; i < ref.size(); ++i) {
                next[i] += Rational(-j) * ref[i];
                next[i + 1] += ref[i];
            }
            ref = std::move(next);
        }
        CHECK(det_Mw(w) == ref);
    }
    CHECK_THROWS_AS(det_Mw(3), std::invalid_argument);
    CHECK_THROWS_AS(det_Mw(-2), std::invalid_argument);
}

TEST_CASE("xi completion is symmetric and hits exact anchors") {
    CHECK(std::abs(xi_completed(2.0) - kPi / 6.0) < 1e-12);
    double p3 = kPi * kPi * kPi;
    CHECK(std::abs(xi_completed(6.0) - 2.0 * p3 / 945.0) < 1e-12);
    CHECK(std::abs(xi_completed(0.3) - xi_completed(0.7)) <
          1e-10 * std::abs(xi_completed(0.3)));
    double prod = xi_completed(9.0) * xi_completed(6.0);
    CHECK(std::abs(prod - kZeta9 / (72.0 * kPi)) < 1e-12);
}

TEST_CASE("xi identity holds at the first diagonal component") {
    XiReport rep = xi_identity_check(1, 8.0, 20000);
    CHECK(rep.rel_discrepancy < 1e-6);
    CHECK(rep.rel_discrepancy < 1e-8);
    double ref = kZeta9 / (72.0 * kPi);
    CHECK(std::abs(rep.lhs - ref) < 1e-8 * ref);
    CHECK(std::abs(rep.rhs - ref) < 1e-12 * ref);
    CHECK(rep.tail_bound > 0.0);
}

TEST_CASE("single modes integrate to the expected gamma factors") {
    struct Mode {
        int k;
        long m, n;
        double s;
    };
    const Mode modes[] = {
        {0, 1, 0, 5.0}, {1, 1, 1, 6.0}, {2, 2, 1, 7.5},
        {3, 3, 0, 6.0}, {-1, 1, 1, 6.0},
    };
    for (const Mode& md : modes) {
        double total = static_cast<double>(md.m + md.n);
        auto integrand = [&](double y) {
            if (y == 0.0) return 0.0;
            return std::pow(-2.0 * kPi * y, md.k) *
                   std::exp(-2.0 * kPi * total * y) * std::pow(y, md.s - 1.0);
        };
        double quad = simpson(integrand, 9.0 / total, 1 << 15);
        double sign = (md.k % 2 != 0) ? -1.0 : 1.0;
        double ref = sign * std::pow(2.0 * kPi, -md.s) *
                     std::tgamma(md.s + md.k) * std::pow(total, -(md.s + md.k));
        CHECK(std::abs(quad - ref) < 1e-8 * std::abs(ref));
    }
}

TEST_CASE("out-of-regime and malformed inputs are rejected") {
    BiSeries g = eisenstein_q(4, 10);
    CHECK_THROWS_AS(dirichlet_data(g, 11), std::invalid_argument);
    CHECK_THROWS_AS(lambda_completed(g, {6.999, 0.0}, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(eis_dirichlet_data(3, 1, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(eis_dirichlet_data(4, 1, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(eis_dirichlet_data(2, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(xi_identity_check(2, 8.0), std::invalid_argument);
    CHECK_THROWS_AS(xi_identity_check(1, 4.0, 100), std::invalid_argument);

    // a band so deep that its Mellin strip closes is refused even when
    // Re(s) clears the weight threshold
    LSeriesData deep;
    deep.alpha = 0;
    deep.beta = 0;
    deep.terms = 2;
    deep.bands[-9].assign(3, SvScalar());
    deep.bands[-9][1] = SvScalar(1);
    CHECK_THROWS_AS(lambda_completed(deep, {3.5, 0.0}),
                    std::invalid_argument);
}
