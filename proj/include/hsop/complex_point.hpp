#pragma once

#include <complex>

namespace hsop {

/// A finite point of the complex plane used for numeric evaluation.
class ComplexPoint {
 public:
  ComplexPoint() = default;
  /// Throws DomainError when either part is NaN or infinite.
  ComplexPoint(double re, double im);
  explicit ComplexPoint(std::complex<double> z) : ComplexPoint(z.real(), z.imag()) {}

  double re() const { return re_; }
  double im() const { return im_; }
  std::complex<double> value() const { return {re_, im_}; }
  double abs() const { return std::abs(value()); }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
};

}  // namespace hsop
