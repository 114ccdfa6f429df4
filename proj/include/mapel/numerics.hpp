#pragma once

#include <cstddef>

#include "mapel/common.hpp"

namespace mapel {

/// Perron root of a square nonnegative matrix by power iteration.
///
/// Starts from the all-ones vector and stops when the sup-norm growth factor
/// changes by less than `tol * (1 + estimate)` between steps, or earlier when
/// the Collatz-Wielandt bracket closes. A 1e-15 floor keeps the iterate
/// strictly positive for reducible matrices. If the plain iteration stalls
/// (periodic matrices), the second half of the budget iterates on A + sI with
/// s the plain estimate.
/// Throws ConvergenceError when `max_iter` runs out.
double spectral_radius(const Matrix& m, double tol = 1e-10, std::size_t max_iter = 10000);

/// Solves a x = rhs with partial pivoting. Throws NumericalError when a pivot
/// falls below 1e-12 times the largest entry of `a`.
Vector solve_linear(const Matrix& a, const Vector& rhs);

/// max_p min_i (a_i . p + c_i) subject to box bounds and extra affine rows
/// e_k . p + d_k >= 0.
///
/// Each row of `objective_rows` and `extra_rows` holds the M coefficients
/// followed by the constant term.
struct MaxMinLpProblem {
  Matrix objective_rows;
  Vector box_lower;
  Vector box_upper;
  Matrix extra_rows;
};

enum class LpStatus { Optimal, InfeasiblePolytope };

struct MaxMinLpSolution {
  Vector p_opt;
  double value = 0.0;
  LpStatus status = LpStatus::InfeasiblePolytope;
};

/// Solves the epigraph form  max t  s.t.  h_i(p) >= t  with a dense two-phase
/// simplex. `tol` is the pivoting tolerance on the internally scaled tableau.
MaxMinLpSolution solve_maxmin_lp(const MaxMinLpProblem& prob, double tol = 1e-9);

}  // namespace mapel
