#include "wops/recurrence.hpp"

#include "wops/errors.hpp"

namespace wops {

RecurrenceTriple recurrence_matrices(const MomentFunctional& u,
                                     const WopsBasis& basis, int n, int i) {
  int d = basis.dimension;
  if (n < 0 || n + 1 > basis.max_degree)
    throw DegreeOverflow("recurrence degree exceeds basis range");
  if (i < 1 || i > d) throw BadParameter("coordinate index out of range");

  std::vector<MultiIndex> level_n = monomial_basis(d, n);
  std::vector<MultiIndex> level_np1 = monomial_basis(d, n + 1);
  int rn = static_cast<int>(level_n.size());
  int rnp1 = static_cast<int>(level_np1.size());
  int rnm1 = n > 0 ? homogeneous_dim(d, n - 1) : 0;

  // Monic leading structure: A is the shift alpha -> alpha + e_i.
  RMatrix A(rn, rnp1);
  for (int r = 0; r < rn; ++r) {
    MultiIndex target = level_n[r];
    target[i - 1] += 1;
    for (int c = 0; c < rnp1; ++c)
      if (level_np1[c] == target) {
        A(r, c) = 1;
        break;
      }
  }

  MPoly xi = MPoly::variable(d, i);
  PolyMatrix xiPn = basis.P[n] * xi;

  RMatrix B = pair_matrix(u, xiPn * basis.P[n].transpose()) * basis.H_inv[n];
  RMatrix C(rn, rnm1);
  if (n > 0)
    C = pair_matrix(u, xiPn * basis.P[n - 1].transpose()) *
        basis.H_inv[n - 1];

  PolyMatrix residual = xiPn - A * basis.P[n + 1] - B * basis.P[n];
  if (n > 0) residual = residual - C * basis.P[n - 1];
  if (!residual.is_zero())
    throw IdentityViolation("three term recurrence identity failed");

  return RecurrenceTriple{std::move(A), std::move(B), std::move(C)};
}

RecurrenceData::RecurrenceData(const MomentFunctional& u,
                               const WopsBasis& basis)
    : dimension_(basis.dimension), basis_(&basis) {
  for (int n = 0; n + 1 <= basis.max_degree; ++n) {
    std::vector<RecurrenceTriple> row;
    for (int i = 1; i <= dimension_; ++i)
      row.push_back(recurrence_matrices(u, basis, n, i));
    triples_.push_back(std::move(row));
  }
}

const RecurrenceTriple& RecurrenceData::at(int n, int i) const {
  if (n < 0 || n > max_degree())
    throw DegreeOverflow("recurrence degree out of range");
  if (i < 1 || i > dimension_)
    throw BadParameter("coordinate index out of range");
  return triples_[n][i - 1];
}

ForwardInverse forward_inverse(const RecurrenceData& rec, int n) {
  const WopsBasis& basis = rec.basis();
  int d = rec.dimension();
  int rn = homogeneous_dim(d, n);
  int rnp1 = homogeneous_dim(d, n + 1);

  std::vector<RMatrix> stacked;
  for (int i = 1; i <= d; ++i) stacked.push_back(rec.at(n, i).A);
  RMatrix An = vstack(stacked);  // d r_n x r_{n+1}
  if (rank(An) < rnp1)
    throw RankDeficient("stacked recurrence matrix A_n lacks full column rank");
  RMatrix Dt = left_inverse(An);  // r_{n+1} x d r_n

  ForwardInverse out;
  RMatrix E_n(rnp1, rn);
  RMatrix E_nm1(rnp1, n > 0 ? homogeneous_dim(d, n - 1) : 0);
  for (int i = 1; i <= d; ++i) {
    RMatrix Dti = Dt.block(0, (i - 1) * rn, rnp1, rn);
    E_n = E_n - Dti * rec.at(n, i).B;
    if (n > 0) E_nm1 = E_nm1 - Dti * rec.at(n, i).C;
    out.D_t.push_back(std::move(Dti));
  }
  out.E_n = std::move(E_n);
  out.E_nm1 = std::move(E_nm1);

  PolyMatrix residual = basis.P[n + 1] - out.E_n * basis.P[n];
  for (int i = 1; i <= d; ++i)
    residual =
        residual - (out.D_t[i - 1] * basis.P[n]) * MPoly::variable(d, i);
  if (n > 0) residual = residual - out.E_nm1 * basis.P[n - 1];
  if (!residual.is_zero())
    throw IdentityViolation("inverted forward recurrence identity failed");
  return out;
}

RMatrix backward_inverse(const RecurrenceData& rec, int n, int i) {
  const WopsBasis& basis = rec.basis();
  int d = rec.dimension();
  if (n < 1) throw BadParameter("backward inversion needs n >= 1");
  const RecurrenceTriple& t = rec.at(n, i);
  RMatrix G = left_inverse(t.C);  // r_{n-1} x r_n

  MPoly xi = MPoly::variable(d, i);
  PolyMatrix residual = basis.P[n - 1] + (G * t.A) * basis.P[n + 1] +
                        (G * t.B) * basis.P[n] - (G * basis.P[n]) * xi;
  if (!residual.is_zero())
    throw IdentityViolation("inverted backward recurrence identity failed");
  return G;
}

}  // namespace wops
