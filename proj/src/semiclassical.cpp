#include "wops/semiclassical.hpp"

#include <string>

#include "wops/errors.hpp"

namespace wops {

RMatrix gradient_gram(const MomentFunctional& u, const PearsonPair& pair,
                      const WopsBasis& basis, int m, int n) {
  if (m > basis.max_degree || n > basis.max_degree)
    throw DegreeOverflow("gradient Gram degree exceeds basis range");
  PolyMatrix gm = grad_row(basis.P[m]);  // d x r_m
  PolyMatrix gn = grad_row(basis.P[n]);
  return pair_matrix(u, gm.transpose() * (pair.phi * gn));
}

StructureCoeffs structure_coeffs(const MomentFunctional& u,
                                 const PearsonPair& pair,
                                 const WopsBasis& basis, int n,
                                 bool strict) {
  int d = basis.dimension;
  PolyMatrix lhs = pair.phi * grad_row(basis.P[n]);  // d x r_n
  int top = std::max(lhs.degree(), 0);
  if (top > basis.max_degree)
    throw DegreeOverflow("structure extraction needs a deeper basis");

  StructureCoeffs out;
  out.n = n;
  int rn = homogeneous_dim(d, n);
  for (int j = 0; j <= top; ++j) {
    int rj = homogeneous_dim(d, j);
    RMatrix Fj(d * rj, rn);
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < rn; ++c) {
        RMatrix cj = pair_matrix(u, basis.P[j].transpose() * lhs(i, c)) *
                     basis.H_inv[j];  // 1 x r_j
        for (int t = 0; t < rj; ++t) Fj(i * rj + t, c) = cj(0, t);
      }
    out.F.push_back(std::move(Fj));
  }

  // Reconstruction must be exact; failure means u is not orthogonal the
  // way the basis claims, i.e. an upstream bug.
  PolyMatrix reconstruction(d, rn, d);
  for (int j = 0; j < static_cast<int>(out.F.size()); ++j) {
    PolyMatrix Id = PolyMatrix::identity(d, d);
    reconstruction =
        reconstruction + kron(Id, basis.P[j].transpose()) * out.F[j];
  }
  if (reconstruction != lhs)
    throw IdentityViolation("structure relation reconstruction failed");

  if (n >= pair.s + 1) {
    for (int j = 0; j < static_cast<int>(out.F.size()); ++j) {
      if (j >= n - pair.s - 1 && j <= n + pair.p - 1) continue;
      if (!out.F[j].is_zero()) {
        if (strict)
          throw BandViolation("structure coefficient F_" +
                              std::to_string(j) + "^" + std::to_string(n) +
                              " is nonzero outside the band");
        out.band_violations.push_back(j);
      }
    }
  }
  return out;
}

std::pair<PolyMatrix, PolyMatrix> compress_structure(const PearsonPair& pair,
                                                     const WopsBasis& basis,
                                                     int n) {
  if (n < pair.s + 1)
    throw BadParameter("compressed structure relation needs n >= s+1");
  if (n + 1 > basis.max_degree)
    throw DegreeOverflow("compressed structure needs degree n+1 in basis");
  int d = basis.dimension;
  PolyMatrix target = pair.phi * grad_row(basis.P[n]);
  PolyMatrix Id = PolyMatrix::identity(d, d);
  std::vector<PolyMatrix> factors = {
      kron(Id, basis.P[n + 1].transpose()),
      kron(Id, basis.P[n].transpose())};
  auto solution =
      solve_poly_combination(target, factors, {pair.s, pair.s + 1});
  return {std::move(solution[0]), std::move(solution[1])};
}

DdrCoeffs ddr_coeffs(const MomentFunctional& u, const PearsonPair& pair,
                     const WopsBasis& basis, int n, bool strict) {
  int d = basis.dimension;
  if (n + pair.s > basis.max_degree)
    throw DegreeOverflow("differential-difference extraction needs n+s <= N");
  PolyMatrix Lrow = L_apply_row(pair, basis.P[n].transpose());  // 1 x r_n
  int rn = homogeneous_dim(d, n);

  DdrCoeffs out;
  out.n = n;
  for (int m = 0; m <= n + pair.s; ++m) {
    RMatrix from_L =
        basis.H_inv[m] * pair_matrix(u, basis.P[m] * Lrow);
    RMatrix from_gram =
        -(basis.H_inv[m] * gradient_gram(u, pair, basis, m, n));
    if (from_L != from_gram)
      throw CrossCheckFailure(
          "Lambda_" + std::to_string(m) + "^" + std::to_string(n) +
          ": moment route and gradient Gram route disagree");
    out.Lambda.push_back(std::move(from_L));
  }

  PolyMatrix reconstruction(1, rn, d);
  for (int i = 0; i < static_cast<int>(out.Lambda.size()); ++i)
    reconstruction =
        reconstruction + basis.P[i].transpose() * out.Lambda[i];
  if (reconstruction != Lrow)
    throw IdentityViolation(
        "differential-difference reconstruction failed");

  auto flag = [&](int i) {
    if (strict)
      throw BandViolation("Lambda_" + std::to_string(i) + "^" +
                          std::to_string(n) + " is nonzero outside the band");
    out.band_violations.push_back(i);
  };
  if (!out.Lambda[0].is_zero()) flag(0);
  if (n >= pair.s + 1) {
    for (int i = 0; i < static_cast<int>(out.Lambda.size()); ++i)
      if ((i < n - pair.s || i > n + pair.s) && !out.Lambda[i].is_zero())
        flag(i);
  }
  return out;
}

std::pair<PolyMatrix, PolyMatrix> compress_ddr(const PearsonPair& pair,
                                               const WopsBasis& basis,
                                               int n) {
  if (n < pair.s + 1)
    throw BadParameter("compressed relation needs n >= s+1");
  if (n + 1 > basis.max_degree)
    throw DegreeOverflow("compressed relation needs degree n+1 in basis");
  PolyMatrix target = L_apply_row(pair, basis.P[n].transpose());
  std::vector<PolyMatrix> factors = {basis.P[n + 1].transpose(),
                                     basis.P[n].transpose()};
  auto solution =
      solve_poly_combination(target, factors, {pair.s - 1, pair.s});
  return {std::move(solution[0]), std::move(solution[1])};
}

PolyMatrix recover_psi(const MomentFunctional& u, const PolyMatrix& phi,
                       const WopsBasis& basis, int s_bound) {
  if (s_bound < 0) throw BadParameter("s_bound must be >= 0");
  if (s_bound + 1 > basis.max_degree)
    throw DegreeOverflow("recovery needs basis degree >= s_bound + 1");
  int d = basis.dimension;
  PolyMatrix psi(d, 1, d);
  for (int i = 0; i <= s_bound + 1; ++i) {
    RMatrix coeff =
        pair_matrix(u, phi * grad_row(basis.P[i])) * basis.H_inv[i];
    psi = psi - coeff * basis.P[i];
  }
  for (int n = 0; n <= basis.max_degree; ++n)
    for (const MultiIndex& alpha : monomial_basis(d, n)) {
      RMatrix r = weak_residual(u, phi, psi, MPoly::monomial(d, alpha));
      if (!r.is_zero())
        throw VerificationFailure(
            "recovered Psi does not satisfy the Pearson equation weakly");
    }
  return psi;
}

std::vector<PolyMatrix> solve_poly_combination(
    const PolyMatrix& target, const std::vector<PolyMatrix>& factors,
    const std::vector<int>& degree_bounds) {
  if (factors.size() != degree_bounds.size())
    throw ShapeMismatch("one degree bound per factor required");
  int dim = target.dimension();
  int rows = target.rows();
  int cols = target.cols();

  int max_deg = target.degree();
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].rows() != rows)
      throw ShapeMismatch("factor row count mismatch");
    if (degree_bounds[k] >= 0)
      max_deg = std::max(max_deg, factors[k].degree() + degree_bounds[k]);
  }
  max_deg = std::max(max_deg, 0);

  // Equation index: (row, monomial of degree <= max_deg).
  std::vector<MultiIndex> eq_monos;
  for (int t = 0; t <= max_deg; ++t)
    for (const MultiIndex& mu : monomial_basis(dim, t)) eq_monos.push_back(mu);
  std::map<MultiIndex, int, TermOrder> eq_index;
  for (std::size_t e = 0; e < eq_monos.size(); ++e)
    eq_index.emplace(eq_monos[e], static_cast<int>(e));

  // Unknown layout: per factor k, per inner row a, per monomial mu with
  // |mu| <= bound_k. Columns of the unknowns decouple, so the same
  // coefficient matrix serves every target column.
  struct Slot {
    int factor;
    int inner_row;
    MultiIndex mono;
  };
  std::vector<Slot> slots;
  std::vector<std::vector<MultiIndex>> bound_monos(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (int t = 0; t <= degree_bounds[k]; ++t)
      for (const MultiIndex& mu : monomial_basis(dim, t))
        bound_monos[k].push_back(mu);
    for (int a = 0; a < factors[k].cols(); ++a)
      for (const MultiIndex& mu : bound_monos[k])
        slots.push_back({static_cast<int>(k), a, mu});
  }

  int n_eqs = rows * static_cast<int>(eq_monos.size());
  int n_unknowns = static_cast<int>(slots.size());
  RMatrix system(n_eqs, n_unknowns);
  for (int sidx = 0; sidx < n_unknowns; ++sidx) {
    const Slot& slot = slots[sidx];
    const PolyMatrix& fk = factors[slot.factor];
    for (int i = 0; i < rows; ++i) {
      const MPoly& f = fk(i, slot.inner_row);
      for (const auto& [nu, c] : f.terms()) {
        MultiIndex mu = mi_add(nu, slot.mono);
        auto it = eq_index.find(mu);
        if (it == eq_index.end())
          throw DegreeOverflow("internal degree bookkeeping error");
        system(i * static_cast<int>(eq_monos.size()) + it->second, sidx) += c;
      }
    }
  }

  RMatrix rhs(n_eqs, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c)
      for (const auto& [nu, v] : target(i, c).terms())
        rhs(i * static_cast<int>(eq_monos.size()) + eq_index.at(nu), c) = v;

  auto x = solve_any(system, rhs);
  if (!x)
    throw NoSolution(
        "no degree-bounded polynomial coefficients satisfy the relation");

  std::vector<PolyMatrix> result;
  for (std::size_t k = 0; k < factors.size(); ++k)
    result.emplace_back(factors[k].cols(), cols, dim);
  for (int sidx = 0; sidx < n_unknowns; ++sidx) {
    const Slot& slot = slots[sidx];
    for (int c = 0; c < cols; ++c)
      result[slot.factor](slot.inner_row, c)
          .add_term(slot.mono, (*x)(sidx, c));
  }

  // The solve is exact, but assert the defining identity anyway.
  PolyMatrix check(rows, cols, dim);
  for (std::size_t k = 0; k < factors.size(); ++k)
    check = check + factors[k] * result[k];
  if (check != target)
    throw IdentityViolation("degree-bounded solve residual is nonzero");
  return result;
}

}  // namespace wops
