#pragma once

#include <vector>

namespace wops {

// Exponent vector (alpha_1, ..., alpha_d), entries nonnegative.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& a);

bool lex_greater(const MultiIndex& a, const MultiIndex& b);

// Canonical term order: higher total degree first, then descending
// lexicographic. Map iteration therefore matches the rendering order.
struct TermOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// All multi-indices of total degree exactly n in d variables, in
// descending lexicographic order; (n, 0, ..., 0) comes first. The list
// has C(n+d-1, n) elements.
std::vector<MultiIndex> monomial_basis(int d, int n);

// r_n = dim of the space of homogeneous degree-n polynomials in d
// variables.
int homogeneous_dim(int d, int n);

// dim of polynomials of total degree <= n.
int poly_space_dim(int d, int n);

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);

}  // namespace wops
