#pragma once

#include <cstddef>

#include "mapel/common.hpp"
#include "mapel/network.hpp"

namespace mapel {

struct GridResult {
  Vector p_best;
  double objective_bps_hz = 0.0;
  std::size_t points_evaluated = 0;
};

inline constexpr int kGridMaxLinks = 4;

/// Exhaustive search of weighted throughput over the grid
/// p_i in {0, p_max_i/(R-1), ..., p_max_i}, skipping points that miss a rate
/// floor. Ties go to the lexicographically smallest p.
///
/// Throws InvalidInput for M > 4 or resolution < 2, and NumericalError if no
/// grid point meets the rate floors.
GridResult grid_search(const Network& net, int resolution);

}  // namespace mapel
