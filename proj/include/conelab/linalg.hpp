#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conelab/polynomial.hpp"
#include "conelab/scalar.hpp"

namespace conelab {

/// Dense matrix over the coefficient field, row-major.
class ScalarMatrix {
 public:
  ScalarMatrix(Field field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ScalarMatrix transposed() const;
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per free column.
  std::vector<std::vector<Scalar>> nullspace() const;
  /// Some x with A x = b, or empty when inconsistent.
  std::vector<Scalar> solve(const std::vector<Scalar>& b) const;

  std::string to_string() const;

 private:
  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Matrix of polynomials, read as a map F^cols -> F^rows (column j is the
/// image of the j-th basis vector).
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows, const std::vector<std::vector<Polynomial>>& columns);
  static PolyMatrix identity(RingPtr ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Polynomial> column(std::size_t c) const;
  std::vector<std::vector<Polynomial>> columns() const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;
  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix operator-(const PolyMatrix& rhs) const;
  PolyMatrix transposed() const;
  ScalarMatrix evaluate(const std::vector<Scalar>& point) const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

/// Determinant by cofactor expansion along the first row (small matrices).
Polynomial determinant(const PolyMatrix& m);

}  // namespace conelab
