#pragma once

#include <cstddef>
#include <vector>

#include "homnambu/scalar.hpp"

namespace homnambu {

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  void append_row(const std::vector<Scalar>& row);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Basis of {x : m x = 0}. One vector per free column, with a 1 in that column and 0 in
// the other free columns; ordered by free column.
std::vector<std::vector<Scalar>> nullspace(Matrix m);

// Throws SingularMap for a non-invertible square matrix.
Matrix inverse(const Matrix& m);

// Is v in the column span of m? Decided by comparing rank(m) with rank([m | v]).
bool in_column_span(const Matrix& m, const std::vector<Scalar>& v);

}  // namespace homnambu
