#pragma once

#include "eisenworks/sv_scalar.hpp"

#include <map>
#include <string>
#include <utility>

namespace eisenworks {

// Two coordinate conventions for the same degree-2n space of binary forms.
// Stored coefficients are identical in both; the Betti flag means each Y
// carries one implicit factor of (2pi i)^-1 relative to the de Rham Y, so
// converting a basis never touches the numbers, it only changes how a
// monomial's transcendental normalization is read off. In the de Rham
// basis the monomial X^r Y^s sits in M-degree -s.
enum class PolyBasis { Betti, DeRham };

class HomPoly {
  public:
    HomPoly(int degree, PolyBasis basis);

    int degree() const { return degree_; }
    PolyBasis basis() const { return basis_; }

    void add_term(int r, int s, const SvScalar& c);
    SvScalar coefficient(int r, int s) const;
    const std::map<std::pair<int, int>, SvScalar>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const HomPoly& o) const;
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator*(const SvScalar& c) const;

    // flips the basis flag; stored data is unchanged by design (see above)
    HomPoly converted(PolyBasis target) const;

    // power of (2pi i) implicitly attached to the stored monomial X^r Y^s
    int implicit_two_pi_i_power(int s) const;

    std::string to_string() const;

    static HomPoly monomial(int r, int s, PolyBasis basis,
                            const SvScalar& c = SvScalar(1));

  private:
    int degree_;
    PolyBasis basis_;
    std::map<std::pair<int, int>, SvScalar> terms_;
};

struct Mat2 {
    PolyBasis basis;
    SvScalar a, b, c, d; // row-major [[a, b], [c, d]]

    static Mat2 identity(PolyBasis basis);
    static Mat2 S(PolyBasis basis); // [[0, -1], [1, 0]]
    static Mat2 T(PolyBasis basis); // [[1, 1], [0, 1]]
    Mat2 operator*(const Mat2& o) const;
};

// right action by substitution (X, Y) -> (aX + bY, cX + dY)
HomPoly sl2_act(const HomPoly& p, const Mat2& g);

// plain product of forms (degree adds)
HomPoly hompoly_mul(const HomPoly& p, const HomPoly& q);

// mu ( d/dX (x) d/dY - d/dY (x) d/dX )^k applied to p (x) q.
// Degrees 2m, 2n give degree 2m + 2n - 2k; identically zero once k
// exceeds either input degree.
HomPoly delta_k(const HomPoly& p, const HomPoly& q, int k);

} // namespace eisenworks
