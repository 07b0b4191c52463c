#pragma once

#include <map>
#include <string>
#include <vector>

#include "wops/multi_index.hpp"
#include "wops/rational.hpp"

namespace wops {

// Multivariate polynomial over the rationals. Zero coefficients are
// never stored, so equality is structural. The degree of the zero
// polynomial is the sentinel -1, used internally only; degree bounds
// like "deg <= s" are asserted as "every term of higher degree is
// zero", which the sentinel satisfies.
class MPoly {
 public:
  explicit MPoly(int dimension);

  static MPoly zero(int dimension) { return MPoly(dimension); }
  static MPoly constant(int dimension, const Rational& c);
  static MPoly monomial(int dimension, const MultiIndex& alpha,
                        const Rational& c = Rational(1));
  // x_i with 1-based index i.
  static MPoly variable(int dimension, int i);

  int dimension() const { return dim_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const MultiIndex& alpha) const;
  const std::map<MultiIndex, Rational, TermOrder>& terms() const {
    return terms_;
  }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& s) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Partial derivative with respect to x_i (1-based).
  MPoly derivative(int i) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // Reinterprets a univariate polynomial as a polynomial in x_i
  // (1-based) inside dimension d.
  static MPoly embed_univariate(const MPoly& p, int d, int i);

  void add_term(const MultiIndex& alpha, const Rational& c);

 private:
  int dim_;
  std::map<MultiIndex, Rational, TermOrder> terms_;
};

// Renders terms sorted by (total degree desc, lex desc), coefficients
// as "p/q", e.g. "x1^2 x2 - 1/3". parse_mpoly accepts the same syntax
// plus optional '*' between factors.
std::string render_mpoly(const MPoly& f);
MPoly parse_mpoly(const std::string& text, int dimension);

}  // namespace wops
