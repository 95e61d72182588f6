#include "hsop/matrix.hpp"

#include <utility>

#include "hsop/errors.hpp"

namespace hsop {

namespace {

// Reduces m in place to reduced row echelon form and returns the pivot columns.
std::vector<std::size_t> reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));
    }
    const Rational inv = m(pivot_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Rational(1);
  return out;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool RationalMatrix::is_symmetric() const { return rows_ == cols_ && *this == transposed(); }

bool RationalMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

RationalMatrix power(const RationalMatrix& m, unsigned exponent) {
  if (m.rows() != m.cols()) throw DomainError("power of a non-square matrix");
  RationalMatrix result = RationalMatrix::identity(m.rows());
  RationalMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RationalMatrix reduced = m;
  const std::vector<std::size_t> pivots = reduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix reduced = m;
  return reduce(reduced).size();
}

}  // namespace hsop
