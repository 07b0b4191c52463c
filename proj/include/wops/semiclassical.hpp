#pragma once

#include <utility>
#include <vector>

#include "wops/pearson.hpp"
#include "wops/wops_basis.hpp"

namespace wops {

// Q_{m,n} = <u, (grad P_m^t)^t Phi grad P_n^t>, an r_m x r_n matrix.
// Gradient quasi-orthogonality says it vanishes for m < n - s.
RMatrix gradient_gram(const MomentFunctional& u, const PearsonPair& pair,
                      const WopsBasis& basis, int m, int n);

// Structure-relation coefficients:
// Phi grad P_n^t = sum_j (I_d x P_j^t) F_j^n with F_j^n of size
// d r_j x r_n. For n >= s+1 the sum is supported on
// n-s-1 <= j <= n+p-1.
struct StructureCoeffs {
  int n = 0;
  std::vector<RMatrix> F;           // index j = 0..n+p-1
  std::vector<int> band_violations; // out-of-band j with F_j != 0
};

// Extraction by Fourier expansion; the reconstruction is asserted
// exactly. In strict mode an out-of-band nonzero block (n >= s+1)
// raises BandViolation, otherwise it is recorded in the result.
StructureCoeffs structure_coeffs(const MomentFunctional& u,
                                 const PearsonPair& pair,
                                 const WopsBasis& basis, int n,
                                 bool strict = true);

// Compressed structure relation
// Phi grad P_n^t = (I_d x P_{n+1}^t) M_1^n + (I_d x P_n^t) M_2^n with
// deg M_1 <= s, deg M_2 <= s+1, found by an exact degree-bounded solve.
std::pair<PolyMatrix, PolyMatrix> compress_structure(const PearsonPair& pair,
                                                     const WopsBasis& basis,
                                                     int n);

// Differential-difference coefficients:
// L[P_n^t] = sum_i P_i^t Lambda_i^n, Lambda_i^n of size r_i x r_n;
// banded on n-s <= i <= n+s for n >= s+1, and Lambda_0^n = 0 always.
struct DdrCoeffs {
  int n = 0;
  std::vector<RMatrix> Lambda;      // index i = 0..n+s
  std::vector<int> band_violations;
};

// Each Lambda_m^n is computed twice, from <u, P_m L[P_n^t]> and from
// the gradient Gram matrix; disagreement raises CrossCheckFailure.
DdrCoeffs ddr_coeffs(const MomentFunctional& u, const PearsonPair& pair,
                     const WopsBasis& basis, int n, bool strict = true);

// Compressed form L[P_n^t] = P_{n+1}^t N_1^n + P_n^t N_2^n with
// deg N_1 <= s-1 (so N_1 = 0 when s = 0) and deg N_2 <= s.
std::pair<PolyMatrix, PolyMatrix> compress_ddr(const PearsonPair& pair,
                                               const WopsBasis& basis, int n);

// Constructive converse of the gradient quasi-orthogonality theorem:
// Psi = - sum_{i=0}^{s_bound+1} <u, Phi grad P_i^t> H_i^{-1} P_i for a
// monic basis. The result is verified to give zero weak residuals up
// to the basis degree; otherwise VerificationFailure.
PolyMatrix recover_psi(const MomentFunctional& u, const PolyMatrix& phi,
                       const WopsBasis& basis, int s_bound);

// Exact solve for polynomial-matrix coefficients X_k of bounded degree
// with sum_k factors[k] * X_k = target; the system decouples by column
// and is solved in reduced row echelon form with free variables zero.
// A bound of -1 forces X_k = 0. Throws NoSolution when infeasible.
std::vector<PolyMatrix> solve_poly_combination(
    const PolyMatrix& target, const std::vector<PolyMatrix>& factors,
    const std::vector<int>& degree_bounds);

}  // namespace wops
