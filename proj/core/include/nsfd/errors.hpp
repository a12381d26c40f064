#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsfd {

// Lengths disagree, empty vectors, non-finite inputs, bad parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of the scheme is violated at a visited state
// (non-strict Lyapunov rate, quasi-positivity failure, negative weight).
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The vector field produced NaN or infinity.
class NonFiniteValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wraps an error raised while advancing from step `step` to `step + 1`.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace nsfd
