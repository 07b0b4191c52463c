#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wops/errors.hpp"
#include "wops/rational.hpp"
#include "wops/rmatrix.hpp"

using namespace wops;

namespace {

RMatrix make(int r, int c, std::vector<long> v) {
  std::vector<Rational> e(v.begin(), v.end());
  return RMatrix(r, c, std::move(e));
}

// Small random rationals with a fixed seed keep the property tests
// reproducible.
RMatrix random_matrix(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m(i, j) = Rational(num(rng)) / Rational(den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2) / Rational(4) == Rational(1) / Rational(2));
  CHECK(to_string(Rational(-3) / Rational(6)) == "-1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("7/3") == Rational(7) / Rational(3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(pochhammer(Rational(1) / 2, 3) ==
        Rational(1) / 2 * (Rational(3) / 2) * (Rational(5) / 2));
  CHECK(pochhammer(Rational(4), 0) == 1);
}

TEST_CASE("rank") {
  CHECK(rank(RMatrix::identity(3)) == 3);
  CHECK(rank(RMatrix::zero(2, 4)) == 0);
  CHECK(rank(make(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("solve square and underdetermined") {
  RMatrix b = make(2, 2, {3, 1, 4, 1});
  CHECK(solve(RMatrix::identity(2), b) == b);

  RMatrix a = make(2, 2, {2, 0, 0, 4});
  RMatrix x = solve(a, RMatrix::identity(2));
  CHECK(x == make(2, 2, {1, 0, 0, 1}) * (Rational(1) / 2) +
                 make(2, 2, {0, 0, 0, 1}) * (Rational(-1) / 4));
  CHECK(x(0, 0) == Rational(1) / 2);
  CHECK(x(1, 1) == Rational(1) / 4);

  // Minimum-norm representative of an underdetermined system.
  RMatrix wide = make(1, 2, {1, 1});
  RMatrix rhs = make(1, 1, {3});
  RMatrix mn = solve(wide, rhs);
  CHECK(mn(0, 0) == Rational(3) / 2);
  CHECK(mn(1, 0) == Rational(3) / 2);

  CHECK_THROWS_AS(solve(make(2, 1, {1, 1}), make(2, 1, {1, 2})),
                  Inconsistent);
}

TEST_CASE("left inverse") {
  CHECK(left_inverse(RMatrix::identity(3)) == RMatrix::identity(3));
  RMatrix ones = make(2, 1, {1, 1});
  RMatrix li = left_inverse(ones);
  CHECK(li == make(1, 2, {1, 1}) * (Rational(1) / 2));
  CHECK_THROWS_AS(left_inverse(make(2, 2, {1, 2, 2, 4})), RankDeficient);
}

TEST_CASE("kron") {
  CHECK(kron(RMatrix::identity(2), RMatrix::identity(3)) ==
        RMatrix::identity(6));
  RMatrix b = make(2, 2, {1, 2, 3, 4});
  CHECK(kron(make(1, 1, {2}), b) == b * Rational(2));
  RMatrix e = kron(make(2, 2, {1, 0, 0, 0}), make(2, 2, {0, 1, 0, 0}));
  RMatrix expect(4, 4);
  expect(0, 1) = 1;
  CHECK(e == expect);
}

TEST_CASE("det and inverse") {
  CHECK(det(make(2, 2, {1, 2, 3, 4})) == Rational(-2));
  CHECK(det(make(2, 2, {1, 2, 2, 4})) == Rational(0));
  RMatrix a = make(2, 2, {2, 1, 1, 1});
  CHECK(inverse(a) * a == RMatrix::identity(2));
  CHECK(!try_inverse(make(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("property: left_inverse(A) * A = I") {
  std::mt19937 rng(20240817);
  int found = 0;
  while (found < 25) {
    int c = 1 + static_cast<int>(rng() % 3);
    int r = c + static_cast<int>(rng() % 3);
    RMatrix a = random_matrix(rng, r, c);
    if (rank(a) != c) continue;
    ++found;
    CHECK(left_inverse(a) * a == RMatrix::identity(c));
  }
}

TEST_CASE("property: kron mixed product") {
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    RMatrix a = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 2);
    RMatrix b = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 3);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("property: solve round-trip") {
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    RMatrix a = random_matrix(rng, 3, 2 + static_cast<int>(rng() % 3));
    RMatrix x0 = random_matrix(rng, a.cols(), 2);
    RMatrix b = a * x0;  // consistent by construction
    CHECK(a * solve(a, b) == b);
  }
}
