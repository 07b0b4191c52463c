#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "wops/errors.hpp"
#include "wops/wops_basis.hpp"

using namespace wops;

namespace {

std::shared_ptr<SimplexJacobi> triangle() {
  return std::make_shared<SimplexJacobi>(
      std::vector<Rational>{0, 0}, Rational(0));
}

}  // namespace

TEST_CASE("degree zero and one on the uniform triangle") {
  auto u = triangle();
  WopsBasis basis = build_monic_wops(*u, 3);
  CHECK(basis.P[0](0, 0) == MPoly::constant(2, Rational(1)));
  CHECK(basis.H[0](0, 0) == 1);

  CHECK(basis.P[1](0, 0) == parse_mpoly("x1 - 1/3", 2));
  CHECK(basis.P[1](1, 0) == parse_mpoly("x2 - 1/3", 2));

  RMatrix h1(2, 2);
  h1(0, 0) = h1(1, 1) = Rational(1) / 18;
  h1(0, 1) = h1(1, 0) = Rational(-1) / 36;
  CHECK(basis.H[1] == h1);
  CHECK(basis.H_inv[1] * basis.H[1] == RMatrix::identity(2));
}

TEST_CASE("orthogonality, monicity, and positive definiteness") {
  auto u = triangle();
  const int N = 5;
  WopsBasis basis = build_monic_wops(*u, N);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m < n; ++m)
      CHECK(pair_matrix(*u, basis.P[n] * basis.P[m].transpose()).is_zero());
    CHECK(pair_matrix(*u, basis.P[n] * basis.P[n].transpose()) == basis.H[n]);

    auto monos = monomial_basis(2, n);
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const MPoly& e = basis.P[n](static_cast<int>(j), 0);
      CHECK(e.coeff(monos[j]) == 1);
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (k != j) CHECK(e.coeff(monos[k]) == 0);
    }

    // positive-definite functional => H_n symmetric with positive
    // leading principal minors
    CHECK(basis.H[n] == basis.H[n].transpose());
    for (int k = 1; k <= basis.H[n].rows(); ++k)
      CHECK(det(basis.H[n].block(0, 0, k, k)) > 0);
  }
}

TEST_CASE("wedge functional also yields a wops") {
  LaguerreJacobi u({Rational(0), Rational(0)});
  WopsBasis basis = build_monic_wops(u, 4);
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m < n; ++m)
      CHECK(pair_matrix(u, basis.P[n] * basis.P[m].transpose()).is_zero());
}

TEST_CASE("pure point mass is not quasi-definite") {
  PointMass origin({Rational(0), Rational(0)}, Rational(1));
  try {
    build_monic_wops(origin, 2);
    FAIL("expected NotQuasiDefinite");
  } catch (const NotQuasiDefinite& e) {
    CHECK(e.degree() == 1);
  }
}

TEST_CASE("expand_in_basis") {
  auto u = triangle();
  WopsBasis basis = build_monic_wops(*u, 4);

  auto c = expand_in_basis(*u, basis, basis.P[1](0, 0));
  CHECK(c[0].is_zero());
  CHECK(c[1](0, 0) == 1);
  CHECK(c[1](0, 1) == 0);

  auto c0 = expand_in_basis(*u, basis, MPoly::constant(2, Rational(1)));
  CHECK(c0[0](0, 0) == 1);

  auto cx = expand_in_basis(*u, basis, MPoly::variable(2, 1));
  CHECK(cx[0](0, 0) == Rational(1) / 3);
  CHECK(cx[1](0, 0) == 1);
  CHECK(cx[1](0, 1) == 0);

  // arbitrary polynomial reconstructs exactly
  MPoly f = parse_mpoly("2 x1^3 - x1 x2 + 5/7 x2^2 - 4", 2);
  auto cf = expand_in_basis(*u, basis, f);
  MPoly back(2);
  for (std::size_t j = 0; j < cf.size(); ++j) {
    PolyMatrix term = cf[j] * basis.P[j];
    back = back + term(0, 0);
  }
  CHECK(back == f);

  MPoly deep = MPoly::monomial(2, {5, 0});
  CHECK_THROWS_AS(expand_in_basis(*u, basis, deep), DegreeOverflow);
}
