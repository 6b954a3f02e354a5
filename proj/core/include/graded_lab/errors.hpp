#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "graded_lab/subset.hpp"

namespace graded_lab {

/// One violated axiom, with the concrete elements that break it.
struct Violation {
  std::string axiom;
  std::string detail;
  std::vector<Elem> witnesses;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Enumeration refused: the carrier is larger than the configured bound.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHomogeneousScalar : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live over different base rings (or modules).
class StructureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class HypothesisUnmet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graded_lab
