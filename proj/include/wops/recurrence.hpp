#pragma once

#include <vector>

#include "wops/moment_functional.hpp"
#include "wops/rmatrix.hpp"
#include "wops/wops_basis.hpp"

namespace wops {

// x_i P_n = A P_{n+1} + B P_n + C P_{n-1}; C has zero columns at n = 0.
struct RecurrenceTriple {
  RMatrix A;  // r_n x r_{n+1}
  RMatrix B;  // r_n x r_n
  RMatrix C;  // r_n x r_{n-1}
};

// Recurrence matrices for degrees n = 0..N-1 and coordinates
// i = 1..d, with every defining identity and rank condition verified
// at construction.
class RecurrenceData {
 public:
  RecurrenceData(const MomentFunctional& u, const WopsBasis& basis);

  int max_degree() const { return static_cast<int>(triples_.size()) - 1; }
  int dimension() const { return dimension_; }
  const RecurrenceTriple& at(int n, int i) const;
  const WopsBasis& basis() const { return *basis_; }

 private:
  int dimension_;
  const WopsBasis* basis_;
  std::vector<std::vector<RecurrenceTriple>> triples_;  // [n][i-1]
};

// Single triple; A is the 0/1 shift matrix forced by monicity, B and C
// come from moment pairings. Throws IdentityViolation if the exact
// recurrence identity fails to reconstruct.
RecurrenceTriple recurrence_matrices(const MomentFunctional& u,
                                     const WopsBasis& basis, int n, int i);

// P_{n+1} = sum_i x_i D_i^t P_n + E_n P_n + E_{n-1} P_{n-1} with D^t the
// canonical left inverse of the stacked A_n.
struct ForwardInverse {
  std::vector<RMatrix> D_t;  // d blocks, each r_{n+1} x r_n
  RMatrix E_n;               // r_{n+1} x r_n
  RMatrix E_nm1;             // r_{n+1} x r_{n-1}
};

ForwardInverse forward_inverse(const RecurrenceData& rec, int n);

// G_{n,i} = canonical left inverse of C_{n,i}; the inverted relation
// P_{n-1} = -G A P_{n+1} + (x_i G - G B) P_n is verified exactly.
RMatrix backward_inverse(const RecurrenceData& rec, int n, int i);

}  // namespace wops
