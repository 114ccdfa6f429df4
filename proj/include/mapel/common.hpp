#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mapel {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Malformed arguments: dimension mismatches, out-of-range parameters, broken
// preconditions the caller could have checked.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical kernel could not produce a trustworthy answer (singular system,
// lost invariant, simplex cycling guard tripped).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative kernel ran out of iterations. Carries the last estimate and
// iterate so the caller can decide whether they are good enough.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double estimate, Vector last_iterate)
      : NumericalError(what), estimate_(estimate), last_iterate_(std::move(last_iterate)) {}

  double estimate() const { return estimate_; }
  const Vector& last_iterate() const { return last_iterate_; }

 private:
  double estimate_;
  Vector last_iterate_;
};

}  // namespace mapel
