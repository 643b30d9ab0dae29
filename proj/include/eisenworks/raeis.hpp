#pragma once

#include "eisenworks/biseries.hpp"
#include "eisenworks/extended.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace eisenworks {

// The differential system that pins a vector-valued family failed to hold
// on the constructed expansions. Construction verifies itself, so seeing
// this means a bug in the solver, not bad user input.
struct InconsistentSystem : std::logic_error {
    explicit InconsistentSystem(const std::string& what)
        : std::logic_error(what) {}
};

// A total-weight-w family {f_{r,s}}_{r+s=w}, each component a BiSeries of
// weights (r,s). These are the coefficients of the vector-valued form in
// the basis U^r V^s with U = X - (log q) Y, V = X + (log qbar) Y.
class VectorModularForm {
  public:
    VectorModularForm(int weight, long trunc);

    int weight() const { return weight_; }
    long trunc() const { return trunc_; }

    const BiSeries& component(int r, int s) const;
    void set_component(int r, int s, const BiSeries& f);
    bool operator==(const VectorModularForm& o) const;

  private:
    int weight_;
    long trunc_;
    std::map<std::pair<int, int>, BiSeries> comps_;
};

// Real-analytic Eisenstein family of total weight w, built by solving
//   d f_{w,0} = L G_{w+2},  d f_{r,s} = (r+1) f_{r+1,s-1}   (s >= 1)
// together with the conjugate system, mode by Fourier mode, with the
// constant part
//   -B_{w+2}/(2(w+1)(w+2)) L + (-1)^s/2 (w!/2^w) C(w,r) zeta(w+1) L^-w
// and zeta(w+1) carried as zsv(w+1)/2. The solved family is re-checked
// against the full system before being returned.
VectorModularForm build_real_eisenstein(int w, long trunc);

// Exact check of all 2(w+1) equations on the truncation; throws
// InconsistentSystem naming the first broken equation.
void verify_eisenstein_system(const VectorModularForm& F);

// The q^l Fourier mode of every component in closed form, as multiples of
// sigma_{w+1}(l): component (r,s) gets sum_k chain[(r,s)][k] L^k q^l. The
// qbar^l mode of (r,s) is the q^l mode of (s,r); mixed modes vanish.
std::map<std::pair<int, int>, std::map<int, Rational>>
eis_pure_mode_chain(int w, long l);

// Polynomial in the de Rham X, Y with expansion coefficients; exponent
// pair (i,j) means X^i Y^j. Staging weights are neutral (0,0).
using XYPoly = std::map<std::pair<int, int>, ExtendedSeries>;

// Expand sum of component(r,s) U^r V^s into X,Y monomials.
XYPoly vector_to_xy(const VectorModularForm& F);

// Inverse basis change: X = (log qbar U + log q V)/2L, Y = (V - U)/2L.
// Coefficients stay in the staging type so callers can inspect residues.
std::map<std::pair<int, int>, ExtendedSeries> xy_to_uv(const XYPoly& P,
                                                       int w, long trunc);

// Same, then log-reduction of every component; throws NonModularResidue
// when the input was not equivariant.
VectorModularForm components_from_xy(const XYPoly& P, int w, long trunc);

} // namespace eisenworks
