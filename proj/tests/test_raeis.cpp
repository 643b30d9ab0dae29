#include "doctest.h"

#include "eisenworks/raeis.hpp"

#include <random>

using namespace eisenworks;

TEST_CASE("constant parts of the weight-2 family") {
    VectorModularForm F = build_real_eisenstein(2, 6);
    const BiSeries& e20 = F.component(2, 0);
    const BiSeries& e11 = F.component(1, 1);
    const BiSeries& e02 = F.component(0, 2);
    CHECK(e20.coefficient(1, 0, 0) == SvScalar(Rational(1, 720)));
    CHECK(e20.coefficient(-2, 0, 0) == Rational(1, 8) * zsv(3));
    CHECK(e11.coefficient(1, 0, 0) == SvScalar(Rational(1, 720)));
    CHECK(e11.coefficient(-2, 0, 0) == Rational(-1, 4) * zsv(3));
    CHECK(e02.coefficient(-2, 0, 0) == Rational(1, 8) * zsv(3));
    CHECK_THROWS_AS(build_real_eisenstein(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_real_eisenstein(0, 4), std::invalid_argument);
}

TEST_CASE("Fourier modes of the weight-2 family") {
    VectorModularForm F = build_real_eisenstein(2, 5);
    const BiSeries& e20 = F.component(2, 0);
    const BiSeries& e02 = F.component(0, 2);
    for (long l = 1; l <= 5; ++l) {
        Rational sig(divisor_sigma(3, l));
        CHECK(e20.coefficient(0, l, 0) == SvScalar(sig / (2 * l)));
        CHECK(e20.coefficient(-1, l, 0) == SvScalar(-sig / (2 * l * l)));
        CHECK(e20.coefficient(-2, l, 0) == SvScalar(sig / (4 * l * l * l)));
        // only the deepest L-power survives on the far antiholomorphic side
        CHECK(e02.coefficient(0, l, 0).is_zero());
        CHECK(e02.coefficient(-2, l, 0) == SvScalar(sig / (4 * l * l * l)));
        CHECK(e20.coefficient(-2, 0, l) == SvScalar(sig / (4 * l * l * l)));
    }
    // mixed q^m qbar^n modes vanish
    for (const auto& [kmn, c] : e20.terms())
        CHECK((std::get<1>(kmn) == 0 || std::get<2>(kmn) == 0));
}

TEST_CASE("differential system closes for higher weights") {
    for (int w : {2, 4, 6, 8})
        CHECK_NOTHROW(build_real_eisenstein(w, 6));
    // a perturbed family must be caught
    VectorModularForm F = build_real_eisenstein(2, 4);
    BiSeries bad = F.component(1, 1);
    bad.add_term(0, 2, 0, SvScalar(Rational(1, 3)));
    F.set_component(1, 1, bad);
    CHECK_THROWS_AS(verify_eisenstein_system(F), InconsistentSystem);
}

TEST_CASE("Laplace eigenvalue, pole bound, and conjugation symmetry") {
    for (int w : {2, 4}) {
        VectorModularForm F = build_real_eisenstein(w, 5);
        for (int r = 0; r <= w; ++r) {
            const BiSeries& f = F.component(r, w - r);
            CHECK(laplacian(f) == f * SvScalar(-w));
            CHECK(f.in_pole_filtration(w));
            CHECK(f.conjugate() == F.component(w - r, r));
            // M-weight of every term is at most 1 once L counts for 1
            for (const auto& [kmn, c] : f.terms())
                CHECK(c.weight() + std::get<0>(kmn) <= 1);
        }
    }
}

TEST_CASE("basis change between monomials and the U,V presentation") {
    // X^2 alone: coefficient of UV is log q log qbar / 2L^2, whose
    // antisymmetric part blocks the reduction
    XYPoly x2;
    x2.emplace(std::make_pair(2, 0),
               ExtendedSeries::constant(SvScalar(1), 0, 0, 4));
    auto uv = xy_to_uv(x2, 2, 4);
    const ExtendedSeries& c11 = uv.at({1, 1});
    CHECK(c11.coefficient(0, 0, 0, 0) == SvScalar(Rational(1, 2)));
    CHECK(c11.coefficient(-2, 2, 0, 0) == SvScalar(Rational(-1, 8)));
    CHECK_THROWS_AS(components_from_xy(x2, 2, 4), NonModularResidue);

    // the genuine family round-trips exactly through the monomial basis
    VectorModularForm F = build_real_eisenstein(2, 4);
    CHECK(components_from_xy(vector_to_xy(F), 2, 4) == F);

    // weight-0 degenerate case: the single component is the constant
    VectorModularForm one(0, 4);
    BiSeries c(0, 0, 4);
    c.add_term(0, 0, 0, SvScalar(7));
    one.set_component(0, 0, c);
    XYPoly p = vector_to_xy(one);
    CHECK(reduce_to_L(p.at({0, 0})) == c);

    // random sparse families round-trip as well
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> kd(-2, 2), md(0, 3), cd(-9, 9);
    for (int trial = 0; trial < 10; ++trial) {
        VectorModularForm G(2, 3);
        for (int r = 0; r <= 2; ++r) {
            BiSeries f(r, 2 - r, 3);
            for (int t = 0; t < 3; ++t)
                f.add_term(kd(rng), md(rng), md(rng),
                           SvScalar(Rational(cd(rng), 1 + md(rng))));
            G.set_component(r, 2 - r, f);
        }
        CHECK(components_from_xy(vector_to_xy(G), 2, 3) == G);
    }
}
