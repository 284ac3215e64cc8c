#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "momentrange/rational.hpp"

namespace momentrange {

/// Row-major dense matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// H[i][j] = 1 / (i + j + 1), the Gram matrix of 1, x, ..., x^{n-1} on [0, 1].
  static Matrix hilbert(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> operator*(const std::vector<Rational>& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Square system matrix * x = rhs. The constructor enforces the shape.
class LinearSystem {
 public:
  LinearSystem(Matrix matrix, std::vector<Rational> rhs);

  const Matrix& matrix() const { return matrix_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  std::size_t dimension() const { return rhs_.size(); }

 private:
  Matrix matrix_;
  std::vector<Rational> rhs_;
};

/// Fraction-free (Bareiss) elimination with first-nonzero pivoting.
Rational determinant_exact(const Matrix& m);

/// Exact solution, checked by substitution. Throws SingularSystem when the
/// determinant vanishes.
std::vector<Rational> solve_linear_exact(const LinearSystem& sys);

/// Rank of an arbitrary (not necessarily square) matrix.
std::size_t rank_exact(const Matrix& m);

}  // namespace momentrange
