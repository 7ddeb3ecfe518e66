#pragma once

#include <stdexcept>
#include <string>

namespace bazlab {

/// Operands of a binary series operation have different truncation orders.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series violates a required normalization (h0 = 1, u0 = 0, c0 = 0 / c1 = 1).
class NormalizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Division by a series whose constant term is zero.
class ZeroConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested outside the configured radius cap.
class EvaluationDomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Invalid operator or class parameter (alpha + c <= 0, beta outside [0,1), ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bazlab
