#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mapel/common.hpp"
#include "mapel/config.hpp"
#include "mapel/network.hpp"
#include "mapel/polyblock.hpp"

namespace mapel {

enum class SolveStatus { Converged, VertexCapReached, IterCapReached, InfeasibleRates };

std::string_view to_string(SolveStatus status);

struct TraceRow {
  std::size_t iteration = 0;
  std::size_t num_vertices = 0;
  double upper_bound_bps_hz = 0.0;
  double best_feasible_bps_hz = 0.0;
  double gap_ratio = 0.0;
};

struct MapelResult {
  Vector p_star;
  /// Best accepted projection; the f/g vector attained by p_star.
  Vector z_star;
  double objective_bps_hz = 0.0;
  /// log2 phi of the last selected vertex, an upper bound on the optimum.
  double upper_bound_bps_hz = 0.0;
  double epsilon_bound = 0.0;
  std::size_t outer_iterations = 0;
  std::size_t vertex_peak = 0;
  SolveStatus status = SolveStatus::InfeasibleRates;
  std::vector<TraceRow> trace;
};

/// Optional per-iteration hook, called with the selected vertex, its
/// projection and the polyblock vertices before refinement. Used by tests to
/// check invariants along a run.
struct SolveObserver {
  virtual ~SolveObserver() = default;
  virtual void on_iteration(std::size_t iteration, const Vector& vertex, const Vector& projection,
                            const VertexSet& vertices) = 0;
};

/// Global weighted-throughput maximization by polyblock outer approximation.
///
/// Stops once the selected vertex is within a relative gap delta of its
/// projection, and returns the best projection seen so far along with the
/// last vertex as certified upper bound.
MapelResult solve(const Network& net, const SolverConfig& cfg = {},
                  SolveObserver* observer = nullptr);

/// Power vector with f/g ratios equal to z, from the linear system
/// (z_i - 1) g_i(p) = G_ii p_i. Falls back to `fallback_p` when the solution
/// leaves the box or misses a rate floor by more than 1e-6 relative.
Vector recover_power(const Network& net, const Vector& z, const Vector& fallback_p);

/// delta / (1 - delta). Throws InvalidInput outside (0, 1).
double epsilon_bound(double delta);

}  // namespace mapel
