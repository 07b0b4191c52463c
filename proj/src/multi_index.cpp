#include "wops/multi_index.hpp"

#include "wops/errors.hpp"
#include "wops/rational.hpp"

namespace wops {

int total_degree(const MultiIndex& a) {
  int s = 0;
  for (int e : a) s += e;
  return s;
}

bool lex_greater(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() > b.size();
}

bool TermOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return lex_greater(a, b);
}

namespace {

void enumerate(int d, int n, MultiIndex& prefix,
               std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == d - 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = n; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(d, n - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> monomial_basis(int d, int n) {
  if (d < 1) throw BadParameter("dimension must be >= 1");
  if (n < 0) throw BadParameter("degree must be >= 0");
  std::vector<MultiIndex> out;
  MultiIndex prefix;
  enumerate(d, n, prefix, out);
  return out;
}

int homogeneous_dim(int d, int n) {
  return static_cast<int>(binomial(n + d - 1, n));
}

int poly_space_dim(int d, int n) {
  return static_cast<int>(binomial(n + d, n));
}

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("multi-index dimension mismatch");
  MultiIndex c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace wops
