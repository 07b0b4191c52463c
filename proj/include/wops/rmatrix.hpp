#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wops/rational.hpp"

namespace wops {

// Dense matrix over the rationals. All arithmetic is exact. Values are
// immutable in practice: operations return fresh matrices. Zero-sized
// dimensions are allowed and behave as expected under multiplication.
class RMatrix {
 public:
  RMatrix() : rows_(0), cols_(0) {}
  RMatrix(int rows, int cols);
  RMatrix(int rows, int cols, std::vector<Rational> entries);

  static RMatrix identity(int n);
  static RMatrix zero(int rows, int cols) { return RMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  Rational& operator()(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  RMatrix transpose() const;
  bool is_zero() const;

  RMatrix operator+(const RMatrix& o) const;
  RMatrix operator-(const RMatrix& o) const;
  RMatrix operator-() const;
  RMatrix operator*(const RMatrix& o) const;
  RMatrix operator*(const Rational& s) const;
  bool operator==(const RMatrix& o) const;
  bool operator!=(const RMatrix& o) const { return !(*this == o); }

  // Contiguous sub-block of size r x c with top-left corner (i0, j0).
  RMatrix block(int i0, int j0, int r, int c) const;

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

RMatrix vstack(const std::vector<RMatrix>& blocks);
RMatrix hstack(const std::vector<RMatrix>& blocks);

// Exact rank over the rationals.
int rank(const RMatrix& m);

Rational det(const RMatrix& m);

std::optional<RMatrix> try_inverse(const RMatrix& m);

// Inverse of a square matrix; throws RankDeficient when singular.
RMatrix inverse(const RMatrix& m);

// One exact solution of AX = B. Square nonsingular systems yield the
// unique solution; otherwise the minimum-norm solution X = A^t Z with
// (A A^t) Z = B, which is deterministic. Throws Inconsistent when the
// system has no solution.
RMatrix solve(const RMatrix& a, const RMatrix& b);

// Particular solution of AX = B via reduced row echelon form with free
// variables set to zero. Returns nullopt when inconsistent.
std::optional<RMatrix> solve_any(const RMatrix& a, const RMatrix& b);

// Canonical left generalized inverse (A^t A)^{-1} A^t of a matrix with
// full column rank. Throws RankDeficient otherwise.
RMatrix left_inverse(const RMatrix& a);

// Kronecker product: block (i,j) equals a(i,j) * B.
RMatrix kron(const RMatrix& a, const RMatrix& b);

}  // namespace wops
