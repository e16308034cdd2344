#pragma once

#include <stdexcept>
#include <string>

namespace l2limits {

/// Input that cannot be parsed or violates a structural rule of the format.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed object that fails a semantic requirement (disconnected
/// complex where a connected one is needed, weights not summing to one...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the bounded-degree regime the approximation results need.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The floating-point and exact routes disagree beyond tolerance.
class NumericalMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace l2limits
