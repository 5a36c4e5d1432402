#include "conelab/linalg.hpp"

#include "conelab/errors.hpp"

namespace conelab {

ScalarMatrix::ScalarMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<std::size_t> ScalarMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(piv, c), (*this)(row, c));
    const Scalar inv = (*this)(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      const Scalar f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t ScalarMatrix::rank() const {
  ScalarMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<Scalar>> ScalarMatrix::nullspace() const {
  ScalarMatrix copy = *this;
  const auto pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -copy(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
  if (b.size() != rows_) throw DomainError("right-hand side has the wrong length");
  ScalarMatrix aug(field_, rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return {};
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
  return x;
}

std::string ScalarMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ", ";
    s += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += (*this)(r, c).to_string();
    }
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring)) {}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows,
                                    const std::vector<std::vector<Polynomial>>& columns) {
  PolyMatrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DomainError("matrix column has the wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<std::vector<Polynomial>> PolyMatrix::columns() const {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t c = 0; c < cols_; ++c) cols.push_back(column(c));
  return cols;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("matrix product shape mismatch");
  PolyMatrix out(ring_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rhs.cols_; ++c)
      for (std::size_t k = 0; k < cols_; ++k)
        if (!(*this)(r, k).is_zero() && !rhs(k, c).is_zero()) out(r, c) += (*this)(r, k) * rhs(k, c);
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix difference shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ScalarMatrix PolyMatrix::evaluate(const std::vector<Scalar>& point) const {
  ScalarMatrix m(ring_->field(), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
  return m;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m(0, 0);
  Polynomial det(m.ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix minor(m.ring(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    Polynomial term = m(0, c) * determinant(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace conelab
