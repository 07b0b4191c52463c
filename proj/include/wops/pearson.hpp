#pragma once

#include <vector>

#include "wops/moment_functional.hpp"
#include "wops/poly_matrix.hpp"

namespace wops {

// Candidate pair for the matrix Pearson-type equation
// div(Phi u) = Psi^t u, with Phi a symmetric d x d polynomial matrix
// and Psi a d x 1 polynomial column of degree >= 1.
struct PearsonPair {
  PolyMatrix phi;        // d x d, symmetric
  PolyMatrix psi;        // d x 1
  PolyMatrix psi_tilde;  // Psi - (div Phi)^t
  int p = 0;             // deg Phi
  int q = 0;             // deg Psi
  int s = 0;             // max(p - 2, q - 1)
};

// Validates symmetry and q >= 1 and fills the derived fields.
PearsonPair make_pearson_pair(PolyMatrix phi, PolyMatrix psi);

// <u, Phi grad f + Psi f>, a d x 1 rational vector; zero for every f
// up to a degree iff the Pearson equation holds weakly to that degree.
RMatrix weak_residual(const MomentFunctional& u, const PolyMatrix& phi,
                      const PolyMatrix& psi, const MPoly& f);
RMatrix weak_residual(const MomentFunctional& u, const PearsonPair& pair,
                      const MPoly& f);

struct SemiclassicalReport {
  bool residuals_zero = false;
  std::vector<MultiIndex> failing_monomials;
  Rational det_u_phi;
  bool det_nonzero = false;
  int p = 0, q = 0, s = 0;
  bool pass() const { return residuals_zero && det_nonzero && q >= 1; }
};

// Checks the weak residual on every monomial of total degree <= N and
// the condition det<u, Phi> != 0.
SemiclassicalReport is_semiclassical(const MomentFunctional& u,
                                     const PearsonPair& pair, int N);

// Weak residual of the Kronecker-extended equation
// div((Phi x I_h) u) = (Psi^t x I_h) u against an h x 1 matrix test
// polynomial F; the result is the dh x 1 vector
// <u, (Phi x I_h) grad F + (Psi x I_h) F> with grad F the stacked
// (d_1 F; ...; d_d F).
RMatrix kronecker_weak_residual(const MomentFunctional& u,
                                const PearsonPair& pair, int h,
                                const PolyMatrix& F);

// L[f] = div(Phi grad f) + Psi~^t grad f. Computed both via that form
// and via the explicit second-order form sum phi_ij d2_ij f +
// sum psi_i d_i f; a disagreement (impossible for consistent pairs)
// raises CrossCheckFailure.
MPoly L_apply(const PearsonPair& pair, const MPoly& f);
PolyMatrix L_apply_row(const PearsonPair& pair, const PolyMatrix& row);

// <u, L[x^alpha]> for all |alpha| <= N, in monomial_basis order per
// degree; all zero iff L*[u] vanishes to degree N.
std::vector<Rational> L_star_moments(const MomentFunctional& u,
                                     const PearsonPair& pair, int N);

// Simplex Jacobi family: phi_ii = x_i (x_i - 1), phi_ij = x_i x_j and
// psi_i = (|alpha0| + beta + d + 1) x_i - (alpha0_i + 1). The weight
// x^alpha0 (1 - |x|)^beta satisfies div(Phi w) = Psi^t w with exactly
// this first-order coefficient.
PearsonPair appell_pair(int d, const std::vector<Rational>& alpha0,
                        const Rational& beta);

// Modification for u + lambda delta_0: Phi^ = x_i Phi and
// Psi^ = (row i of Phi)^t + x_i Psi, valid for every 1 <= i <= d.
PearsonPair appell_type_pair(int d, const std::vector<Rational>& alpha0,
                             const Rational& beta, int i);

// The wedge family pair as printed in its source: diagonal Phi with
// entries x_1(x_1 - x_d), x_2, ..., x_{d-1}, x_1^2 (x_1 - x_d).
PearsonPair example2_pair(int d, const std::vector<Rational>& a);

}  // namespace wops
