#include "wops/poly_matrix.hpp"

#include <algorithm>

#include "wops/errors.hpp"

namespace wops {

PolyMatrix::PolyMatrix(int rows, int cols, int dimension)
    : rows_(rows), cols_(cols), dim_(dimension) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, MPoly(dimension));
}

PolyMatrix PolyMatrix::identity(int n, int dimension) {
  PolyMatrix m(n, n, dimension);
  for (int i = 0; i < n; ++i) m(i, i) = MPoly::constant(dimension, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::from_rmatrix(const RMatrix& m, int dimension) {
  PolyMatrix p(m.rows(), m.cols(), dimension);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      p(i, j) = MPoly::constant(dimension, m(i, j));
  return p;
}

int PolyMatrix::degree() const {
  int deg = -1;
  for (const auto& e : entries_) deg = std::max(deg, e.degree());
  return deg;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, dim_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || dim_ != o.dim_)
    throw ShapeMismatch("polynomial matrix addition mismatch");
  PolyMatrix r(rows_, cols_, dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] + o.entries_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || dim_ != o.dim_)
    throw ShapeMismatch("polynomial matrix subtraction mismatch");
  PolyMatrix r(rows_, cols_, dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] - o.entries_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r(rows_, cols_, dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = -entries_[k];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_ || dim_ != o.dim_)
    throw ShapeMismatch("polynomial matrix product mismatch");
  PolyMatrix r(rows_, o.cols_, dim_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const MPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r(i, j) = r(i, j) + a * o(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::operator*(const MPoly& f) const {
  if (f.dimension() != dim_)
    throw DimensionMismatch("scalar polynomial dimension mismatch");
  PolyMatrix r(rows_, cols_, dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] * f;
  return r;
}

PolyMatrix PolyMatrix::operator*(const Rational& s) const {
  PolyMatrix r(rows_, cols_, dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] * s;
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && dim_ == o.dim_ &&
         entries_ == o.entries_;
}

PolyMatrix PolyMatrix::block(int i0, int j0, int r, int c) const {
  if (i0 < 0 || j0 < 0 || i0 + r > rows_ || j0 + c > cols_)
    throw ShapeMismatch("block out of range");
  PolyMatrix m(r, c, dim_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
  return m;
}

PolyMatrix operator*(const RMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("matrix product shape mismatch");
  PolyMatrix r(a.rows(), b.cols(), b.dimension());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        r(i, j) = r(i, j) + b(k, j) * a(i, k);
    }
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("matrix product shape mismatch");
  PolyMatrix r(a.rows(), b.cols(), a.dimension());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const MPoly& f = a(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        r(i, j) = r(i, j) + f * b(k, j);
      }
    }
  return r;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("Kronecker factors in different dimensions");
  PolyMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.dimension());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

PolyMatrix gradient(const MPoly& f) {
  int d = f.dimension();
  PolyMatrix g(d, 1, d);
  for (int i = 1; i <= d; ++i) g(i - 1, 0) = f.derivative(i);
  return g;
}

PolyMatrix grad_row(const PolyMatrix& p) {
  if (p.cols() != 1) throw ShapeMismatch("grad_row expects a column");
  int d = p.dimension();
  PolyMatrix g(d, p.rows(), d);
  for (int j = 0; j < p.rows(); ++j)
    for (int i = 1; i <= d; ++i) g(i - 1, j) = p(j, 0).derivative(i);
  return g;
}

PolyMatrix divergence_row(const PolyMatrix& phi) {
  if (phi.rows() != phi.cols())
    throw ShapeMismatch("divergence_row expects a square matrix");
  int d = phi.rows();
  PolyMatrix r(1, d, phi.dimension());
  for (int j = 0; j < d; ++j) {
    MPoly s(phi.dimension());
    for (int i = 0; i < d; ++i) s = s + phi(i, j).derivative(i + 1);
    r(0, j) = s;
  }
  return r;
}

}  // namespace wops
