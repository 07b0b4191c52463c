#pragma once

#include <vector>

#include "wops/moment_functional.hpp"
#include "wops/poly_matrix.hpp"
#include "wops/rmatrix.hpp"

namespace wops {

// Monic weak orthogonal polynomial system up to degree N. P[n] is the
// r_n x 1 column of monic polynomials ordered like monomial_basis(d, n);
// H[n] = <u, P_n P_n^t> is nonsingular by construction.
struct WopsBasis {
  int dimension = 0;
  int max_degree = -1;
  std::vector<PolyMatrix> P;
  std::vector<RMatrix> H;
  std::vector<RMatrix> H_inv;
};

// Per-degree Gram solve against the monomial basis. Throws
// NotQuasiDefinite(n) when the degree-(n-1) moment Gram matrix or H_n
// is singular.
WopsBasis build_monic_wops(const MomentFunctional& u, int N);

// Fourier coefficients of f in the basis: f = sum_j c_j P_j with
// c_j = <u, f P_j^t> H_j^{-1} (a 1 x r_j row). The reconstruction is
// verified exactly before returning.
std::vector<RMatrix> expand_in_basis(const MomentFunctional& u,
                                     const WopsBasis& basis, const MPoly& f);

}  // namespace wops
