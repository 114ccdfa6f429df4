#pragma once

#include <cstddef>
#include <vector>

#include "mapel/common.hpp"
#include "mapel/config.hpp"
#include "mapel/network.hpp"

namespace mapel {

struct ProjectionResult {
  /// Largest alpha found with alpha * z in the feasible region.
  double lambda = 0.0;
  /// Power vector whose f/g ratios witness lambda.
  Vector p_star;
  std::size_t iterations = 0;
  bool converged = false;
  /// Accepted Dinkelbach ratios, in order. Non-decreasing.
  std::vector<double> lambda_trace;
};

/// Projects z onto the upper boundary of the feasible f/g region along the ray
/// from the origin, by Dinkelbach iteration over the max-min LP.
///
/// Starts from the minimal-power vector when the network has rate floors and
/// from the power caps otherwise. Throws InvalidInput if z is not strictly
/// positive or the rate floors are infeasible.
ProjectionResult project(const Network& net, const Vector& z, const SolverConfig& cfg = {});

/// Same, with a caller-supplied starting point that must satisfy the box and
/// the rate floors. Lets the outer loop skip the feasibility check.
ProjectionResult project(const Network& net, const Vector& z, const SolverConfig& cfg,
                         const Vector& p_init);

struct MaxMinSinrResult {
  Vector p;
  double min_sinr = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Maximizes the smallest SINR over the power box. Rate floors are ignored.
MaxMinSinrResult maxmin_sinr(const Network& net, const SolverConfig& cfg = {});

}  // namespace mapel
