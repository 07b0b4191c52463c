#include "wops/mpoly.hpp"

#include <cctype>
#include <sstream>

#include "wops/errors.hpp"

namespace wops {

MPoly::MPoly(int dimension) : dim_(dimension) {
  if (dimension < 1) throw BadParameter("dimension must be >= 1");
}

MPoly MPoly::constant(int dimension, const Rational& c) {
  MPoly f(dimension);
  f.add_term(MultiIndex(dimension, 0), c);
  return f;
}

MPoly MPoly::monomial(int dimension, const MultiIndex& alpha,
                      const Rational& c) {
  if (static_cast<int>(alpha.size()) != dimension)
    throw DimensionMismatch("monomial multi-index has wrong length");
  MPoly f(dimension);
  f.add_term(alpha, c);
  return f;
}

MPoly MPoly::variable(int dimension, int i) {
  if (i < 1 || i > dimension) throw BadParameter("variable index out of range");
  MultiIndex alpha(dimension, 0);
  alpha[i - 1] = 1;
  return monomial(dimension, alpha);
}

int MPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);  // highest degree iterates first
}

Rational MPoly::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const MultiIndex& alpha, const Rational& c) {
  if (static_cast<int>(alpha.size()) != dim_)
    throw DimensionMismatch("term multi-index has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("polynomial dimension mismatch");
  MPoly r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("polynomial dimension mismatch");
  MPoly r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(dim_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("polynomial dimension mismatch");
  MPoly r(dim_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add_term(mi_add(a, b), ca * cb);
  return r;
}

MPoly MPoly::operator*(const Rational& s) const {
  MPoly r(dim_);
  if (s == 0) return r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, c * s);
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  return dim_ == o.dim_ && terms_ == o.terms_;
}

MPoly MPoly::derivative(int i) const {
  if (i < 1 || i > dim_) throw BadParameter("derivative index out of range");
  MPoly r(dim_);
  for (const auto& [a, c] : terms_) {
    if (a[i - 1] == 0) continue;
    MultiIndex b = a;
    b[i - 1] -= 1;
    r.add_term(b, c * a[i - 1]);
  }
  return r;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw DimensionMismatch("evaluation point has wrong length");
  Rational total(0);
  for (const auto& [a, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < dim_; ++i)
      for (int e = 0; e < a[i]; ++e) term *= point[i];
    total += term;
  }
  return total;
}

MPoly MPoly::embed_univariate(const MPoly& p, int d, int i) {
  if (p.dimension() != 1)
    throw DimensionMismatch("embed_univariate expects a univariate input");
  if (i < 1 || i > d) throw BadParameter("target variable out of range");
  MPoly r(d);
  for (const auto& [a, c] : p.terms()) {
    MultiIndex alpha(d, 0);
    alpha[i - 1] = a[0];
    r.add_term(alpha, c);
  }
  return r;
}

std::string render_mpoly(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [alpha, c] : f.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(alpha) > 0;
    if (mag != 1 || !has_vars) {
      out << to_string(mag);
      if (has_vars) out << " ";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (!first_var) out << " ";
      first_var = false;
      out << "x" << (i + 1);
      if (alpha[i] > 1) out << "^" << alpha[i];
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  int dim;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '*'))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  [[noreturn]] void fail(const std::string& what) {
    throw BadParameter("polynomial parse error at position " +
                       std::to_string(pos) + ": " + what);
  }

  Rational parse_number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    }
    return parse_rational(text.substr(start, pos - start));
  }

  int parse_int() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected integer");
    return std::stoi(text.substr(start, pos - start));
  }

  // coefficient? (variable power)*  e.g. "2/3 x1^2 x2"
  MPoly parse_term() {
    skip_ws();
    Rational coeff(1);
    bool saw_anything = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_number();
      saw_anything = true;
    }
    MultiIndex alpha(dim, 0);
    while (true) {
      skip_ws();
      if (pos >= text.size() || peek() != 'x') break;
      ++pos;
      int var = parse_int();
      if (var < 1 || var > dim) fail("variable index out of range");
      int exp = 1;
      skip_ws();
      if (pos < text.size() && peek() == '^') {
        ++pos;
        skip_ws();
        exp = parse_int();
      }
      alpha[var - 1] += exp;
      saw_anything = true;
    }
    if (!saw_anything) fail("expected term");
    return MPoly::monomial(dim, alpha, coeff);
  }

  MPoly parse_poly() {
    MPoly total(dim);
    bool negative = false;
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos;
    }
    while (true) {
      MPoly term = parse_term();
      total = negative ? total - term : total + term;
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return total;
  }
};

}  // namespace

MPoly parse_mpoly(const std::string& text, int dimension) {
  std::string trimmed = text;
  if (trimmed == "0") return MPoly::zero(dimension);
  Parser p{text, 0, dimension};
  return p.parse_poly();
}

}  // namespace wops
