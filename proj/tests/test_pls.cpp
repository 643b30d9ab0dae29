#include "doctest.h"

#include "eisenworks/pls.hpp"

using namespace eisenworks;

namespace {

MultiPoly xv(int i, int n) { return MultiPoly::variable(i, n); }

const MultiPoly* find_residue(const LdsReport& rep, const std::string& name) {
    for (const auto& [n, p] : rep.residues)
        if (n == name)
            return &p;
    return nullptr;
}

} // namespace

TEST_CASE("polynomial arithmetic, slices, and substitution") {
    const MultiPoly x1 = xv(1, 2), x2 = xv(2, 2);

    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    CHECK((x1 * Rational(3) - x1 * Rational(3)).is_zero());
    CHECK(MultiPoly::monomial({2, 5}, Rational(0)).is_zero());

    MultiPoly p = x1 * x1 + x2;
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({0, 1}) == 1);
    CHECK(p.coefficient({1, 1}) == 0);
    CHECK(p.homogeneous_slice(2) == x1 * x1);
    CHECK(p.homogeneous_slice(1) == x2);
    CHECK(p.homogeneous_slice(5).is_zero());

    // x1 -> x1 + x2 turns a square into the full binomial expansion
    MultiPoly sq = xv(1, 1) * xv(1, 1);
    MultiPoly expanded = sq.substitute({{Rational(1), Rational(1)}}, 2);
    CHECK(expanded == x1 * x1 + x1 * x2 * Rational(2) + x2 * x2);

    CHECK_THROWS_AS(xv(1, 1) + xv(1, 2), std::invalid_argument);

    CHECK((x1 * x1 - x2 * Rational(2)).to_string() == "-2*x2 + x1^2");
    CHECK(MultiPoly::constant(Rational(-1, 3), 2).to_string() == "-1/3");
    CHECK(MultiPoly(2).to_string() == "0");
}

TEST_CASE("canonical denominators") {
    auto d1 = denominator_factors(1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == std::vector<Rational>{Rational(1)});

    // depth 3: x1, x1 - x2, x2 - x3, x3
    auto d3 = denominator_factors(3);
    REQUIRE(d3.size() == 4);
    CHECK(d3[0] == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(d3[1] == std::vector<Rational>{Rational(1), Rational(-1), Rational(0)});
    CHECK(d3[2] == std::vector<Rational>{Rational(0), Rational(1), Rational(-1)});
    CHECK(d3[3] == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("rho sends words to monomials in the runs after each b") {
    std::map<Word, SvScalar> one_word;
    one_word[Word::from_string("bab")] = SvScalar(1);
    // b a b has runs (0; 1, 0), so both conventions give x1
    CHECK(rho_words(one_word, 2).numerator == xv(1, 2));
    CHECK(rho_words(one_word, 2, RhoConvention::RequireLeadingB).numerator == xv(1, 2));

    const LieElement ab = bracket(LieElement::a(), LieElement::b());
    // [a,b] = ab - ba; collapsing the leading run sends ab to the
    // constant 1, while the strict reading keeps only ba
    CHECK(rho(ab, 1).numerator == MultiPoly::constant(Rational(1), 1) - xv(1, 1));
    CHECK(rho(ab, 1, RhoConvention::RequireLeadingB).numerator == -xv(1, 1));

    std::map<Word, SvScalar> plain;
    plain[Word::from_string("ab")] = SvScalar(1);
    CHECK(rho_words(plain, 1).numerator == MultiPoly::constant(Rational(1), 1));
    CHECK(rho_words(plain, 1, RhoConvention::RequireLeadingB).is_zero());

    // words of the wrong b-degree are ignored
    CHECK(rho(ab, 2).is_zero());
    CHECK(rho(LieElement(), 1).is_zero());

    CHECK_THROWS_AS(rho_words({}, 0), std::invalid_argument);
    CHECK_THROWS_AS(rho_words({}, -3), std::invalid_argument);
}

TEST_CASE("double shuffle equations at depth two") {
    auto f = [](const MultiPoly& num) { return RatFn{2, num}; };
    const MultiPoly x1 = xv(1, 2), x2 = xv(2, 2);

    // the swapped denominator is -1 times the original, so the
    // antisymmetry residue is N(x1,x2) - N(x2,x1)
    auto rep = check_lds(f(x1));
    REQUIRE(rep.residues.size() == 2);
    REQUIRE(find_residue(rep, "antisymmetry") != nullptr);
    REQUIRE(find_residue(rep, "stuffle") != nullptr);
    CHECK(*find_residue(rep, "antisymmetry") == x1 - x2);
    CHECK(*find_residue(rep, "stuffle") == -x1 - x2);

    // an antisymmetric numerator doubles rather than cancels
    rep = check_lds(f(x1 - x2));
    CHECK_FALSE(rep.passed());
    REQUIRE(find_residue(rep, "antisymmetry") != nullptr);
    CHECK(*find_residue(rep, "antisymmetry") == x1 * Rational(2) - x2 * Rational(2));
    REQUIRE(find_residue(rep, "stuffle") != nullptr);
    CHECK(*find_residue(rep, "stuffle") == x1 + x2);

    // symmetric numerators satisfy antisymmetry but not stuffle
    rep = check_lds(f(x1 + x2));
    CHECK(find_residue(rep, "antisymmetry") == nullptr);
    REQUIRE(find_residue(rep, "stuffle") != nullptr);
    CHECK(*find_residue(rep, "stuffle") == x1 * Rational(-3) - x2 * Rational(3));

    rep = check_lds(f(x1 * x2));
    CHECK(find_residue(rep, "antisymmetry") == nullptr);
    REQUIRE(find_residue(rep, "stuffle") != nullptr);
    CHECK(*find_residue(rep, "stuffle") == -(x1 + x2) * (x1 + x2));

    CHECK(check_lds(f(MultiPoly(2))).passed());

    CHECK_THROWS_AS(check_lds(RatFn{1, xv(1, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(check_lds(RatFn{4, MultiPoly(4)}), std::invalid_argument);
}

TEST_CASE("double shuffle equations at depth three") {
    // for N = 1 the three shuffle terms cancel after clearing
    // denominators, while the stuffle terms all reduce to the same
    // denominator and add up to 3
    auto rep = check_lds(RatFn{3, MultiPoly::constant(Rational(1), 3)});
    CHECK(find_residue(rep, "shuffle") == nullptr);
    REQUIRE(find_residue(rep, "stuffle") != nullptr);
    CHECK(*find_residue(rep, "stuffle") == MultiPoly::constant(Rational(3), 3));
}

TEST_CASE("bracket images satisfy the double shuffle equations") {
    auto image = [](int i, int j) {
        return der_bracket(epsilon(i, EpsilonVariant::Dual), epsilon(j, EpsilonVariant::Dual)).on_a;
    };

    // collapsing the leading run: the numerators come out symmetric, so
    // antisymmetry holds but the stuffle residue is nonzero
    for (auto [i, j] : {std::pair{4, 6}, {4, 8}, {6, 8}}) {
        CAPTURE(i);
        CAPTURE(j);
        auto rep = check_lds(rho(image(i, j), 2));
        REQUIRE(rep.residues.size() == 1);
        CHECK(rep.residues[0].first == "stuffle");
    }

    RatFn v46 = rho(image(4, 6), 2);
    CHECK(v46.numerator.coefficient({0, 2}) == 2);
    CHECK(check_lds(v46).residues[0].second.coefficient({0, 2}) == -2);

    // requiring a leading b repairs the stuffle equation as well
    for (auto [i, j] : {std::pair{4, 6}, {4, 8}, {6, 8}}) {
        CAPTURE(i);
        CAPTURE(j);
        RatFn g = rho(image(i, j), 2, RhoConvention::RequireLeadingB);
        CHECK_FALSE(g.is_zero());
        CHECK(check_lds(g).passed());
    }

    RatFn r46 = rho(image(4, 6), 2, RhoConvention::RequireLeadingB);
    MultiPoly want = MultiPoly::monomial({2, 7}, Rational(2)) +
                     MultiPoly::monomial({3, 6}, Rational(-7)) +
                     MultiPoly::monomial({4, 5}, Rational(5)) +
                     MultiPoly::monomial({5, 4}, Rational(5)) +
                     MultiPoly::monomial({6, 3}, Rational(-7)) +
                     MultiPoly::monomial({7, 2}, Rational(2));
    CHECK(r46.numerator == want);

    CHECK(rho(image(4, 4), 2).is_zero());
    CHECK(check_lds(rho(image(4, 4), 2)).passed());
}

TEST_CASE("triple bracket image at depth three") {
    DerivationTheta d = der_bracket(
        der_bracket(epsilon(4, EpsilonVariant::Dual), epsilon(6, EpsilonVariant::Dual)),
        epsilon(8, EpsilonVariant::Dual));
    for (const auto& [w, c] : d.on_a.word_expansion())
        CHECK(w.bidegree() == std::pair{16, 3});

    RatFn strict = rho(d.on_a, 3, RhoConvention::RequireLeadingB);
    CHECK_FALSE(strict.is_zero());
    CHECK(check_lds(strict).passed());

    // the collapsed reading breaks down at depth three entirely
    auto rep = check_lds(rho(d.on_a, 3));
    REQUIRE(rep.residues.size() == 2);
    CHECK(find_residue(rep, "shuffle") != nullptr);
    CHECK(find_residue(rep, "stuffle") != nullptr);
}
