#pragma once

#include <vector>

#include "wops/mpoly.hpp"
#include "wops/rmatrix.hpp"

namespace wops {

// Dense matrix of multivariate polynomials sharing one ambient
// dimension d. deg of the matrix is the max over entries.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), dim_(1) {}
  PolyMatrix(int rows, int cols, int dimension);

  static PolyMatrix identity(int n, int dimension);
  static PolyMatrix from_rmatrix(const RMatrix& m, int dimension);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dimension() const { return dim_; }
  int degree() const;  // -1 when all entries are zero
  bool is_zero() const;

  const MPoly& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  MPoly& operator()(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  PolyMatrix transpose() const;

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator*(const MPoly& f) const;
  PolyMatrix operator*(const Rational& s) const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  PolyMatrix block(int i0, int j0, int r, int c) const;

 private:
  int rows_, cols_, dim_;
  std::vector<MPoly> entries_;
};

PolyMatrix operator*(const RMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const RMatrix& b);

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

// Column of partial derivatives (d_1 f, ..., d_d f)^t.
PolyMatrix gradient(const MPoly& f);

// For a column P of r polynomials, the d x r matrix with (i,j) entry
// d_i P_j.
PolyMatrix grad_row(const PolyMatrix& p);

// Row vector whose j-th entry is the divergence of column j of a
// square polynomial matrix: sum_i d_i phi_ij.
PolyMatrix divergence_row(const PolyMatrix& phi);

}  // namespace wops
