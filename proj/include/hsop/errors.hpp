#pragma once

#include <stdexcept>

namespace hsop {

/// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A floating-point evaluation left the finite range of double.
class NumericRangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

}  // namespace hsop
