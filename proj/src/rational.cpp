#include "wops/rational.hpp"

#include <stdexcept>

#include "wops/errors.hpp"

namespace wops {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw BadParameter("empty rational literal");
  std::string body = text.substr(begin, end - begin + 1);
  try {
    Rational r(body);
    return r;
  } catch (const std::exception&) {
    throw BadParameter("cannot parse rational literal '" + text + "'");
  }
}

Rational pochhammer(const Rational& a, int k) {
  Rational result(1);
  Rational factor = a;
  for (int i = 0; i < k; ++i) {
    result *= factor;
    factor += 1;
  }
  return result;
}

Integer factorial(int n) {
  Integer result(1);
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer result(1);
  for (int i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

}  // namespace wops
