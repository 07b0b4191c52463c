#include "wops/wops_basis.hpp"

#include "wops/errors.hpp"

namespace wops {

WopsBasis build_monic_wops(const MomentFunctional& u, int N) {
  if (N < 0) throw BadParameter("max degree must be >= 0");
  int d = u.dimension();
  WopsBasis basis;
  basis.dimension = d;
  basis.max_degree = N;

  // Monomials of degree < n, shared across degrees.
  std::vector<MultiIndex> lower;

  for (int n = 0; n <= N; ++n) {
    std::vector<MultiIndex> level = monomial_basis(d, n);
    int rn = static_cast<int>(level.size());
    int m = static_cast<int>(lower.size());

    PolyMatrix Pn(rn, 1, d);
    if (n == 0) {
      Pn(0, 0) = MPoly::constant(d, Rational(1));
    } else {
      // Gram system: G c = b with G the moment matrix of the lower
      // monomials; its singularity means some H_k, k < n, already
      // failed, reported here as the failing degree.
      RMatrix gram(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          gram(i, j) = u.moment(mi_add(lower[i], lower[j]));
      RMatrix rhs(m, rn);
      for (int i = 0; i < m; ++i)
        for (int c = 0; c < rn; ++c)
          rhs(i, c) = u.moment(mi_add(lower[i], level[c]));
      auto coeffs = solve_any(gram, rhs);
      if (!coeffs || rank(gram) < m) throw NotQuasiDefinite(n);
      for (int c = 0; c < rn; ++c) {
        MPoly p = MPoly::monomial(d, level[c]);
        for (int i = 0; i < m; ++i)
          p.add_term(lower[i], -(*coeffs)(i, c));
        Pn(c, 0) = p;
      }
    }

    RMatrix Hn = pair_matrix(u, Pn * Pn.transpose());
    auto Hn_inv = try_inverse(Hn);
    if (!Hn_inv) throw NotQuasiDefinite(n);

    basis.P.push_back(std::move(Pn));
    basis.H.push_back(std::move(Hn));
    basis.H_inv.push_back(std::move(*Hn_inv));
    lower.insert(lower.end(), level.begin(), level.end());
  }
  return basis;
}

std::vector<RMatrix> expand_in_basis(const MomentFunctional& u,
                                     const WopsBasis& basis, const MPoly& f) {
  if (f.dimension() != basis.dimension)
    throw DimensionMismatch("polynomial dimension mismatch");
  if (f.degree() > basis.max_degree)
    throw DegreeOverflow("polynomial degree exceeds basis range");
  int top = std::max(f.degree(), 0);
  std::vector<RMatrix> coeffs;
  MPoly residual = f;
  for (int j = 0; j <= top; ++j) {
    RMatrix cj =
        pair_matrix(u, basis.P[j].transpose() * f) * basis.H_inv[j];
    PolyMatrix contrib = cj * basis.P[j];  // 1 x 1
    residual = residual - contrib(0, 0);
    coeffs.push_back(std::move(cj));
  }
  if (!residual.is_zero())
    throw IdentityViolation("basis expansion failed to reconstruct input");
  return coeffs;
}

}  // namespace wops
