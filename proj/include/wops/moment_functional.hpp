#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wops/mpoly.hpp"
#include "wops/multi_index.hpp"
#include "wops/poly_matrix.hpp"
#include "wops/rational.hpp"
#include "wops/rmatrix.hpp"

namespace wops {

// Source of exact normalized moments mu_alpha. Immutable after
// construction; moment lookup memoizes under a lock, so instances are
// safe to share across threads.
class MomentFunctional {
 public:
  virtual ~MomentFunctional() = default;

  int dimension() const { return dim_; }
  Rational moment(const MultiIndex& alpha) const;

  // JSON parameter record, see functional_from_json for the schema.
  virtual nlohmann::json descriptor() const = 0;

 protected:
  explicit MomentFunctional(int dimension);
  virtual Rational compute_moment(const MultiIndex& alpha) const = 0;

 private:
  int dim_;
  mutable std::mutex mutex_;
  mutable std::map<MultiIndex, Rational> cache_;
};

using FunctionalPtr = std::shared_ptr<const MomentFunctional>;

// Jacobi weight x^alpha0 (1-|x|)^beta on the d-simplex, normalized to
// mu_0 = 1. Moments are products of Pochhammer ratios.
class SimplexJacobi : public MomentFunctional {
 public:
  SimplexJacobi(std::vector<Rational> alpha0, Rational beta);
  const std::vector<Rational>& alpha0() const { return alpha0_; }
  const Rational& beta() const { return beta_; }
  nlohmann::json descriptor() const override;

 protected:
  Rational compute_moment(const MultiIndex& alpha) const override;

 private:
  std::vector<Rational> alpha0_;
  Rational beta_;
};

// lambda * delta at a rational location.
class PointMass : public MomentFunctional {
 public:
  PointMass(std::vector<Rational> location, Rational weight);
  nlohmann::json descriptor() const override;

 protected:
  Rational compute_moment(const MultiIndex& alpha) const override;

 private:
  std::vector<Rational> location_;
  Rational weight_;
};

// Product weight x_1^{a_1} ... x_{d-1}^{a_{d-1}} e^{-(x_1+...+x_{d-1})}
// (1 - x_d/x_1)^{a_d} on the wedge -x_1 < x_d < x_1, x_i > 0,
// normalized to mu_0 = 1.
class LaguerreJacobi : public MomentFunctional {
 public:
  explicit LaguerreJacobi(std::vector<Rational> a);
  const std::vector<Rational>& a() const { return a_; }
  nlohmann::json descriptor() const override;

 protected:
  Rational compute_moment(const MultiIndex& k) const override;

 private:
  std::vector<Rational> a_;
};

// Entrywise sum of functionals of equal dimension.
class SumFunctional : public MomentFunctional {
 public:
  explicit SumFunctional(std::vector<FunctionalPtr> parts);
  const std::vector<FunctionalPtr>& parts() const { return parts_; }
  nlohmann::json descriptor() const override;

 protected:
  Rational compute_moment(const MultiIndex& alpha) const override;

 private:
  std::vector<FunctionalPtr> parts_;
};

FunctionalPtr sum_functional(FunctionalPtr u, FunctionalPtr v);

// Schema: {"type": "simplex_jacobi", "alpha": ["0","0"], "beta": "0"}
//       | {"type": "point_mass", "location": [...], "weight": "1"}
//       | {"type": "laguerre_jacobi", "a": [...]}
//       | {"type": "sum", "parts": [...]}
FunctionalPtr functional_from_json(const nlohmann::json& j);

// Linear extension of the moments to polynomials.
Rational pair(const MomentFunctional& u, const MPoly& f);

// Entrywise pairing of a polynomial matrix.
RMatrix pair_matrix(const MomentFunctional& u, const PolyMatrix& m);

// Classical univariate polynomials with exact rational coefficients,
// via their standard three-term recurrences.
MPoly laguerre_1d(int k, const Rational& a);
MPoly jacobi_1d(int k, const Rational& a, const Rational& b);

// The product polynomials of the wedge family:
//   L_{k1-kd}^{(a1+2kd+1)}(x1) L_{k2}^{(a2)}(x2) ... L_{k_{d-1}}^{(a_{d-1})}(x_{d-1})
//   * x1^{kd} P_{kd}^{(ad,0)}(x_d/x_1),
// with the Jacobi factor expanded by homogenization. Requires k1 >= kd.
MPoly example2_product_poly(const std::vector<Rational>& a,
                            const MultiIndex& k);

}  // namespace wops
