#include "wops/rmatrix.hpp"

#include <utility>

#include "wops/errors.hpp"

namespace wops {

RMatrix::RMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
}

RMatrix::RMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
    throw ShapeMismatch("entry count does not match matrix shape");
}

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

RMatrix RMatrix::operator+(const RMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix addition shape mismatch");
  RMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] + o.entries_[k];
  return r;
}

RMatrix RMatrix::operator-(const RMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("matrix subtraction shape mismatch");
  RMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] - o.entries_[k];
  return r;
}

RMatrix RMatrix::operator-() const {
  RMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = -entries_[k];
  return r;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
  if (cols_ != o.rows_)
    throw ShapeMismatch("matrix product shape mismatch");
  RMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

RMatrix RMatrix::operator*(const Rational& s) const {
  RMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] * s;
  return r;
}

bool RMatrix::operator==(const RMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

RMatrix RMatrix::block(int i0, int j0, int r, int c) const {
  if (i0 < 0 || j0 < 0 || i0 + r > rows_ || j0 + c > cols_)
    throw ShapeMismatch("block out of range");
  RMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
  return m;
}

RMatrix vstack(const std::vector<RMatrix>& blocks) {
  if (blocks.empty()) return RMatrix();
  int cols = blocks.front().cols();
  int rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeMismatch("vstack column mismatch");
    rows += b.rows();
  }
  RMatrix m(rows, cols);
  int r0 = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return m;
}

RMatrix hstack(const std::vector<RMatrix>& blocks) {
  if (blocks.empty()) return RMatrix();
  int rows = blocks.front().rows();
  int cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeMismatch("hstack row mismatch");
    cols += b.cols();
  }
  RMatrix m(rows, cols);
  int c0 = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b.cols(); ++j) m(i, c0 + j) = b(i, j);
    c0 += b.cols();
  }
  return m;
}

namespace {

// In-place reduced row echelon form. Returns the pivot column of each
// pivot row, in order.
std::vector<int> rref(RMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = Rational(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const RMatrix& m) {
  RMatrix work = m;
  return static_cast<int>(rref(work).size());
}

Rational det(const RMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square");
  int n = m.rows();
  RMatrix work = m;
  Rational result(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (work(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != col) {
      for (int j = col; j < n; ++j) std::swap(work(p, j), work(col, j));
      result = -result;
    }
    result *= work(col, col);
    Rational inv = Rational(1) / work(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (work(i, col) == 0) continue;
      Rational f = work(i, col) * inv;
      for (int j = col; j < n; ++j) work(i, j) -= f * work(col, j);
    }
  }
  return result;
}

std::optional<RMatrix> try_inverse(const RMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square");
  int n = m.rows();
  RMatrix aug = hstack({m, RMatrix::identity(n)});
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  for (int p : pivots)
    if (p >= n) return std::nullopt;  // singular: pivot fell in the I block
  return aug.block(0, n, n, n);
}

RMatrix inverse(const RMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw RankDeficient("matrix is singular");
  return *inv;
}

std::optional<RMatrix> solve_any(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve shape mismatch");
  RMatrix aug = hstack({a, b});
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;  // pivot in the RHS block
  RMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x(pivots[r], j) = aug(static_cast<int>(r), a.cols() + j);
  return x;
}

RMatrix solve(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve shape mismatch");
  if (a.rows() == a.cols()) {
    auto inv = try_inverse(a);
    if (inv) return *inv * b;
  }
  // Minimum-norm solution through the normal equations of the
  // transposed system: X = A^t Z with (A A^t) Z = B. Over the
  // rationals range(A A^t) = range(A), so solvability here is exactly
  // consistency of the original system.
  RMatrix gram = a * a.transpose();
  auto z = solve_any(gram, b);
  if (!z) throw Inconsistent("linear system has no solution");
  return a.transpose() * *z;
}

RMatrix left_inverse(const RMatrix& a) {
  RMatrix gram = a.transpose() * a;
  auto inv = try_inverse(gram);
  if (!inv)
    throw RankDeficient("left_inverse requires full column rank");
  return *inv * a.transpose();
}

RMatrix kron(const RMatrix& a, const RMatrix& b) {
  RMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

}  // namespace wops
