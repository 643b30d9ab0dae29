#include "doctest.h"

#include "eisenworks/hompoly.hpp"

using namespace eisenworks;

namespace {

const PolyBasis dR = PolyBasis::DeRham;

HomPoly X2() { return HomPoly::monomial(2, 0, dR); }
HomPoly Y2() { return HomPoly::monomial(0, 2, dR); }
HomPoly XY() { return HomPoly::monomial(1, 1, dR); }

// a non-symmetric degree-4 form used by the equivariance checks
HomPoly sample4() {
    HomPoly p(4, dR);
    p.add_term(4, 0, SvScalar(1));
    p.add_term(3, 1, SvScalar(Rational(-2, 3)));
    p.add_term(1, 3, SvScalar(5));
    return p;
}

HomPoly sample2() {
    HomPoly p(2, dR);
    p.add_term(2, 0, SvScalar(Rational(1, 2)));
    p.add_term(1, 1, SvScalar(-3));
    p.add_term(0, 2, SvScalar(Rational(7, 4)));
    return p;
}

} // namespace

TEST_CASE("group action by substitution") {
    CHECK(sl2_act(X2(), Mat2::S(dR)) == Y2());
    CHECK(sl2_act(XY(), Mat2::identity(dR)) == XY());

    HomPoly expect(2, dR);
    expect.add_term(2, 0, SvScalar(1));
    expect.add_term(1, 1, SvScalar(2));
    expect.add_term(0, 2, SvScalar(1));
    CHECK(sl2_act(X2(), Mat2::T(dR)) == expect);

    // right action: acting by S then T agrees with acting by S*T once
    Mat2 ST = Mat2::S(dR) * Mat2::T(dR);
    HomPoly p = sample4();
    CHECK(sl2_act(sl2_act(p, Mat2::S(dR)), Mat2::T(dR)) == sl2_act(p, ST));

    CHECK_THROWS_AS(sl2_act(X2(), Mat2::S(PolyBasis::Betti)),
                    std::invalid_argument);
}

TEST_CASE("pairing operator on small forms") {
    HomPoly four_xy = HomPoly::monomial(1, 1, dR, SvScalar(4));
    CHECK(delta_k(X2(), Y2(), 1) == four_xy);
    CHECK(delta_k(X2(), X2(), 1).is_zero());
    CHECK(delta_k(sample4(), sample2(), 0) ==
          hompoly_mul(sample4(), sample2()));
    // order beyond either degree annihilates
    CHECK(delta_k(X2(), sample4(), 3).is_zero());
    CHECK(delta_k(X2(), Y2(), 2).degree() == 0);
    // full contraction of X^2 against Y^2: 4(X ox Y), then 4(1 ox 1)
    CHECK(delta_k(X2(), Y2(), 2).coefficient(0, 0).as_rational() == 4);
}

TEST_CASE("pairing operator is equivariant") {
    HomPoly p = sample4(), q = sample2();
    for (const Mat2& g :
         {Mat2::S(dR), Mat2::T(dR), Mat2::S(dR) * Mat2::T(dR)}) {
        for (int k = 0; k <= 2; ++k) {
            HomPoly lhs = delta_k(sl2_act(p, g), sl2_act(q, g), k);
            HomPoly rhs = sl2_act(delta_k(p, q, k), g);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("basis bookkeeping for the comparison map") {
    HomPoly p = sample4(), q = sample2();
    HomPoly pb = p.converted(PolyBasis::Betti);
    HomPoly qb = q.converted(PolyBasis::Betti);
    // stored data is untouched by conversion
    CHECK(pb.terms() == p.terms());
    CHECK(pb.converted(dR) == p);
    // the two-pi-i normalization lives on the flag, one inverse power per Y
    CHECK(p.implicit_two_pi_i_power(3) == 0);
    CHECK(pb.implicit_two_pi_i_power(3) == -3);

    // pairing commutes with conversion on stored data; the interpreted
    // (2 pi i)^k mismatch is exactly the Y-degree the operator removes
    for (int k = 0; k <= 2; ++k) {
        HomPoly betti_side = delta_k(pb, qb, k);
        HomPoly drham_side = delta_k(p, q, k).converted(PolyBasis::Betti);
        CHECK(betti_side == drham_side);
    }
    // on monomial inputs the Y-count drops by k in every surviving term,
    // so the implicit normalization shifts by (2 pi i)^k and nothing else
    HomPoly m1 = HomPoly::monomial(3, 1, PolyBasis::Betti);
    HomPoly m2 = HomPoly::monomial(1, 1, PolyBasis::Betti);
    for (int k = 0; k <= 1; ++k) {
        HomPoly paired = delta_k(m1, m2, k);
        for (const auto& [rs, c] : paired.terms()) {
            CHECK(m1.implicit_two_pi_i_power(rs.second) ==
                  m1.implicit_two_pi_i_power(1) + m2.implicit_two_pi_i_power(1) + k);
        }
    }
    CHECK_THROWS_AS(delta_k(pb, q, 1), std::invalid_argument);
    CHECK_THROWS_AS(hompoly_mul(pb, q), std::invalid_argument);
}
