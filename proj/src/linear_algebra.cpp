#include "momentrange/linear_algebra.hpp"

#include <utility>

#include "momentrange/errors.hpp"

namespace momentrange {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Bareiss forward elimination over the leading `pivot_cols` columns.
// Returns the sign accumulated by row swaps, or 0 once a column has no pivot.
int bareiss_forward(Matrix& m, std::size_t pivot_cols) {
  const std::size_t n = m.rows();
  int sign = 1;
  Rational prev(1);
  for (std::size_t k = 0; k < pivot_cols && k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      swap_rows(m, pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Rational(0);
    }
    prev = m(k, k);
  }
  return sign;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::hilbert(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(1, static_cast<long>(i + j + 1));
  return m;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

LinearSystem::LinearSystem(Matrix matrix, std::vector<Rational> rhs)
    : matrix_(std::move(matrix)), rhs_(std::move(rhs)) {
  if (!matrix_.is_square() || matrix_.rows() != rhs_.size())
    throw Error("linear system must be square with matching right-hand side");
}

Rational determinant_exact(const Matrix& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Matrix work = m;
  const int sign = bareiss_forward(work, n);
  if (sign == 0) return Rational(0);
  return sign > 0 ? work(n - 1, n - 1) : -work(n - 1, n - 1);
}

std::vector<Rational> solve_linear_exact(const LinearSystem& sys) {
  const std::size_t n = sys.dimension();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = sys.matrix()(i, j);
    aug(i, n) = sys.rhs()[i];
  }
  if (bareiss_forward(aug, n) == 0 || (n > 0 && aug(n - 1, n - 1).is_zero()))
    throw SingularSystem("singular linear system");

  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = aug(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= aug(ii, j) * x[j];
    x[ii] = acc / aug(ii, ii);
  }
  if (sys.matrix() * x != sys.rhs()) throw InternalConsistencyError("linear solve failed substitution check");
  return x;
}

std::size_t rank_exact(const Matrix& m) {
  Matrix work = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < work.cols() && rank < work.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < work.rows() && work(pivot, c).is_zero()) ++pivot;
    if (pivot == work.rows()) continue;
    swap_rows(work, pivot, rank);
    for (std::size_t i = rank + 1; i < work.rows(); ++i) {
      if (work(i, c).is_zero()) continue;
      const Rational f = work(i, c) / work(rank, c);
      for (std::size_t j = c; j < work.cols(); ++j) work(i, j) -= f * work(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace momentrange
