#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsum {

// Base type for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// q (or a derived parameter) too close to the singular point q = 1.
class SingularParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Matrix input with unusable shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A denominator factor vanished inside a truncated series.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Transformation whose new argument has modulus >= 1 (or needs a division by zero).
class InapplicableTransformError : public Error {
 public:
  using Error::Error;
};

// Continued-fraction convergent with a vanishing denominator B_k.
class IndeterminateConvergentError : public Error {
 public:
  IndeterminateConvergentError(std::size_t depth_, const std::string& what)
      : Error(what), depth(depth_) {}
  std::size_t depth;
};

// Term budget exhausted before a sum or tail could be classified.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Oscillating tail failed to settle onto two accumulation points.
class NonBiConvergentError : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

// Two supposedly equivalent evaluation routes disagreed beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsum
