#include "wops/pearson.hpp"

#include "wops/errors.hpp"

namespace wops {

PearsonPair make_pearson_pair(PolyMatrix phi, PolyMatrix psi) {
  int d = phi.rows();
  if (phi.cols() != d) throw ShapeMismatch("Phi must be square");
  if (phi.dimension() != d || psi.dimension() != d)
    throw DimensionMismatch("pair entries must live in d variables");
  if (psi.rows() != d || psi.cols() != 1)
    throw ShapeMismatch("Psi must be a d x 1 column");
  if (phi != phi.transpose()) throw BadParameter("Phi must be symmetric");
  PearsonPair pair;
  pair.p = std::max(phi.degree(), 0);
  pair.q = psi.degree();
  if (pair.q < 1) throw BadParameter("deg Psi must be >= 1");
  pair.s = std::max(pair.p - 2, pair.q - 1);
  pair.psi_tilde = psi - divergence_row(phi).transpose();
  pair.phi = std::move(phi);
  pair.psi = std::move(psi);
  return pair;
}

RMatrix weak_residual(const MomentFunctional& u, const PolyMatrix& phi,
                      const PolyMatrix& psi, const MPoly& f) {
  if (f.dimension() != u.dimension())
    throw DimensionMismatch("test polynomial dimension mismatch");
  return pair_matrix(u, phi * gradient(f) + psi * f);
}

RMatrix weak_residual(const MomentFunctional& u, const PearsonPair& pair,
                      const MPoly& f) {
  return weak_residual(u, pair.phi, pair.psi, f);
}

SemiclassicalReport is_semiclassical(const MomentFunctional& u,
                                     const PearsonPair& pair, int N) {
  SemiclassicalReport report;
  report.p = pair.p;
  report.q = pair.q;
  report.s = pair.s;
  int d = u.dimension();
  report.residuals_zero = true;
  for (int n = 0; n <= N; ++n)
    for (const MultiIndex& alpha : monomial_basis(d, n)) {
      RMatrix r = weak_residual(u, pair, MPoly::monomial(d, alpha));
      if (!r.is_zero()) {
        report.residuals_zero = false;
        report.failing_monomials.push_back(alpha);
      }
    }
  report.det_u_phi = det(pair_matrix(u, pair.phi));
  report.det_nonzero = report.det_u_phi != 0;
  return report;
}

RMatrix kronecker_weak_residual(const MomentFunctional& u,
                                const PearsonPair& pair, int h,
                                const PolyMatrix& F) {
  if (h < 1) throw BadParameter("Kronecker order must be >= 1");
  if (F.cols() != 1 || F.rows() != h)
    throw ShapeMismatch("test polynomial must be an h x 1 column");
  if (F.dimension() != u.dimension())
    throw DimensionMismatch("test polynomial dimension mismatch");
  int d = u.dimension();
  PolyMatrix Ih = PolyMatrix::identity(h, d);
  PolyMatrix gradF(d * h, 1, d);  // stacked (d_1 F; ...; d_d F)
  for (int i = 1; i <= d; ++i)
    for (int k = 0; k < h; ++k)
      gradF((i - 1) * h + k, 0) = F(k, 0).derivative(i);
  PolyMatrix lhs = kron(pair.phi, Ih) * gradF + kron(pair.psi, Ih) * F;
  return pair_matrix(u, lhs);
}

MPoly L_apply(const PearsonPair& pair, const MPoly& f) {
  int d = pair.phi.rows();
  if (f.dimension() != d)
    throw DimensionMismatch("operand dimension mismatch");

  // div(Phi grad f) + Psi~^t grad f
  PolyMatrix flux = pair.phi * gradient(f);
  MPoly weak_form(d);
  for (int i = 1; i <= d; ++i)
    weak_form = weak_form + flux(i - 1, 0).derivative(i);
  PolyMatrix first_order = pair.psi_tilde.transpose() * gradient(f);
  weak_form = weak_form + first_order(0, 0);

  // sum_ij phi_ij d2_ij f + sum_i psi_i d_i f
  MPoly explicit_form(d);
  for (int i = 1; i <= d; ++i) {
    MPoly dif = f.derivative(i);
    for (int j = 1; j <= d; ++j)
      explicit_form = explicit_form + pair.phi(i - 1, j - 1) * dif.derivative(j);
    explicit_form = explicit_form + pair.psi(i - 1, 0) * dif;
  }

  if (weak_form != explicit_form)
    throw CrossCheckFailure("the two forms of L disagree");
  return weak_form;
}

PolyMatrix L_apply_row(const PearsonPair& pair, const PolyMatrix& row) {
  if (row.rows() != 1) throw ShapeMismatch("L_apply_row expects a row");
  PolyMatrix out(1, row.cols(), row.dimension());
  for (int j = 0; j < row.cols(); ++j) out(0, j) = L_apply(pair, row(0, j));
  return out;
}

std::vector<Rational> L_star_moments(const MomentFunctional& u,
                                     const PearsonPair& pp, int N) {
  int d = u.dimension();
  std::vector<Rational> values;
  for (int n = 0; n <= N; ++n)
    for (const MultiIndex& alpha : monomial_basis(d, n))
      values.push_back(pair(u, L_apply(pp, MPoly::monomial(d, alpha))));
  return values;
}

PearsonPair appell_pair(int d, const std::vector<Rational>& alpha0,
                        const Rational& beta) {
  if (static_cast<int>(alpha0.size()) != d)
    throw BadParameter("alpha0 must have d entries");
  for (const auto& a : alpha0)
    if (a <= -1) throw BadParameter("alpha0_i must be > -1");
  if (beta <= -1) throw BadParameter("beta must be > -1");

  PolyMatrix phi(d, d, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      MPoly e = MPoly::variable(d, i) * MPoly::variable(d, j);
      if (i == j) e = e - MPoly::variable(d, i);
      phi(i - 1, j - 1) = e;
    }

  Rational abs_alpha0(0);
  for (const auto& a : alpha0) abs_alpha0 += a;
  Rational lead = abs_alpha0 + beta + d + 1;
  PolyMatrix psi(d, 1, d);
  for (int i = 1; i <= d; ++i)
    psi(i - 1, 0) = MPoly::variable(d, i) * lead -
                    MPoly::constant(d, alpha0[i - 1] + 1);
  return make_pearson_pair(std::move(phi), std::move(psi));
}

PearsonPair appell_type_pair(int d, const std::vector<Rational>& alpha0,
                             const Rational& beta, int i) {
  if (i < 1 || i > d) throw BadParameter("modification index out of range");
  PearsonPair base = appell_pair(d, alpha0, beta);
  MPoly xi = MPoly::variable(d, i);
  PolyMatrix phi_hat = base.phi * xi;
  // Psi^ = (row i of Phi)^t + x_i Psi
  PolyMatrix psi_hat = base.phi.block(i - 1, 0, 1, d).transpose() +
                       base.psi * xi;
  return make_pearson_pair(std::move(phi_hat), std::move(psi_hat));
}

PearsonPair example2_pair(int d, const std::vector<Rational>& a) {
  if (d < 2) throw BadParameter("wedge pair requires d >= 2");
  if (static_cast<int>(a.size()) != d)
    throw BadParameter("parameter vector must have d entries");
  for (const auto& ai : a)
    if (ai <= -1) throw BadParameter("parameters must be > -1");

  MPoly x1 = MPoly::variable(d, 1);
  MPoly xd = MPoly::variable(d, d);
  PolyMatrix phi(d, d, d);
  phi(0, 0) = x1 * (x1 - xd);
  for (int i = 2; i <= d - 1; ++i) phi(i - 1, i - 1) = MPoly::variable(d, i);
  phi(d - 1, d - 1) = x1 * x1 * (x1 - xd);

  PolyMatrix psi(d, 1, d);
  psi(0, 0) = -(x1 * x1) + x1 * xd + x1 * (a[0] + 2) +
              xd * (a[d - 1] - a[0] - 1);
  for (int i = 2; i <= d - 1; ++i)
    psi(i - 1, 0) = MPoly::constant(d, a[i - 1]) - MPoly::variable(d, i);
  psi(d - 1, 0) = x1 * x1 * (-(a[d - 1] + 1));
  return make_pearson_pair(std::move(phi), std::move(psi));
}

}  // namespace wops
