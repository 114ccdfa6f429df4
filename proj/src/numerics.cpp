#include "mapel/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mapel {
namespace {

constexpr double kPositivityFloor = 1e-15;

struct PowerIterationOutcome {
  bool converged;
  double estimate;
  Vector x;
};

// Runs x <- (A + shift I) x on the unit sup-norm sphere. The estimate is
// ||(A + shift I) x||_inf; iteration stops when it changes by less than
// tol * (1 + estimate), or when the Collatz-Wielandt bracket
// [min_i y_i/x_i, max_i y_i/x_i] is that narrow. Returns the estimate for A.
PowerIterationOutcome power_iterate(const Matrix& a, double shift, double tol, std::size_t iters,
                                    Vector x) {
  x /= x.lpNorm<Eigen::Infinity>();
  double estimate = -1.0;
  for (std::size_t it = 0; it < iters; ++it) {
    Vector y = a * x + shift * x;
    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double ratio = y(i) / x(i);
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    const double norm = y.lpNorm<Eigen::Infinity>();
    if (norm == 0.0) return {true, 0.0, x};  // nilpotent on the positive cone
    const double previous = estimate;
    estimate = norm;
    x = y / norm;
    x.array() += kPositivityFloor;
    x /= x.lpNorm<Eigen::Infinity>();
    if (upper - lower <= tol * (1.0 + upper)) {
      return {true, std::max(0.0, 0.5 * (lower + upper) - shift), x};
    }
    if (previous >= 0.0 && std::abs(estimate - previous) <= tol * (1.0 + estimate)) {
      return {true, std::max(0.0, estimate - shift), x};
    }
  }
  return {false, std::max(0.0, estimate - shift), x};
}

}  // namespace

double spectral_radius(const Matrix& m, double tol, std::size_t max_iter) {
  if (m.rows() != m.cols()) throw InvalidInput("spectral_radius needs a square matrix");
  if (m.size() == 0) return 0.0;
  if ((m.array() < 0.0).any()) throw InvalidInput("spectral_radius needs a nonnegative matrix");
  if (m.isZero(0.0)) return 0.0;

  const std::size_t half = std::max<std::size_t>(1, max_iter / 2);
  auto plain = power_iterate(m, 0.0, tol, half, Vector::Ones(m.rows()));
  if (plain.converged) return plain.estimate;

  // Periodic matrices make the plain iterate oscillate; A + sI is aperiodic
  // with the same Perron vector. Taking s near rho keeps the gap to the
  // other eigenvalues wide whatever the scale of m.
  const double shift = plain.estimate > 0.0 ? plain.estimate : m.cwiseAbs().rowwise().sum().maxCoeff();
  auto shifted = power_iterate(m, shift, tol, max_iter - half, plain.x);
  if (shifted.converged) return shifted.estimate;
  throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iter) +
                             " iterations",
                         shifted.estimate, shifted.x);
}

Vector solve_linear(const Matrix& a, const Vector& rhs) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw InvalidInput("solve_linear needs a square matrix");
  if (rhs.size() != n) throw InvalidInput("solve_linear: rhs length differs from matrix size");

  Matrix lu = a;
  Vector x = rhs;
  const double scale = std::max(a.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const double pivot_floor = 1e-12 * scale;

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    lu.col(col).tail(n - col).cwiseAbs().maxCoeff(&pivot);
    pivot += col;
    if (std::abs(lu(pivot, col)) < pivot_floor) {
      throw NumericalError("solve_linear: matrix is singular to working precision");
    }
    if (pivot != col) {
      lu.row(col).swap(lu.row(pivot));
      std::swap(x(col), x(pivot));
    }
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const double factor = lu(r, col) / lu(col, col);
      if (factor == 0.0) continue;
      lu.row(r).tail(n - col) -= factor * lu.row(col).tail(n - col);
      x(r) -= factor * x(col);
    }
  }
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    double acc = x(r);
    for (Eigen::Index c = r + 1; c < n; ++c) acc -= lu(r, c) * x(c);
    x(r) = acc / lu(r, r);
  }
  return x;
}

}  // namespace mapel
