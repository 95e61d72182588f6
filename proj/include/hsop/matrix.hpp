#pragma once

#include <cstddef>
#include <vector>

#include "hsop/rational.hpp"

namespace hsop {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  RationalMatrix transposed() const;
  bool is_symmetric() const;
  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Square-and-multiply power of a square matrix; power 0 gives the identity.
RationalMatrix power(const RationalMatrix& m, unsigned exponent);

/// Basis of the right nullspace {v : m v = 0} from the reduced row echelon
/// form, one basis vector per free column (free entry set to 1).
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Rank by exact Gaussian elimination.
std::size_t rank(const RationalMatrix& m);

}  // namespace hsop
