#pragma once

#include <cstddef>

namespace mapel {

/// Approximation factor and the numerical knobs of the outer loop and the
/// projection.
struct SolverConfig {
  double delta = 0.05;
  double proj_tol = 1e-9;
  std::size_t proj_max_iter = 200;
  double lp_tol = 1e-9;
  std::size_t max_outer_iter = 500000;
  std::size_t max_vertices = 2000000;

  /// Throws InvalidInput unless 0 < delta < 1 and all tolerances and caps are
  /// positive.
  void validate() const;
};

}  // namespace mapel
