#pragma once

#include <stdexcept>
#include <string>

namespace twoatom {

// Raised when a numerical state violates a physical invariant (trace,
// Hermiticity, positivity). The CLI maps this to exit code 2.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

// Basis tag does not match what an operation requires.
class BasisMismatch : public std::invalid_argument {
 public:
  explicit BasisMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace twoatom
