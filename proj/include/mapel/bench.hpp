#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapel/config.hpp"

namespace mapel {

struct BenchOptions {
  int links = 2;
  int count = 5;
  std::uint64_t seed = 0;
  std::vector<double> deltas{0.05};
  double r_min_bps_hz = 0.0;
  /// Grid resolution of the oracle column, used for M <= 3.
  int oracle_resolution_2 = 501;
  int oracle_resolution_3 = 61;
  /// Writes 0 in the wall-time column so output is byte-reproducible.
  bool record_timing = true;
  SolverConfig base;
};

struct BenchRow {
  std::uint64_t seed = 0;
  int links = 0;
  double delta = 0.0;
  std::string status;
  double objective_bps_hz = 0.0;
  double upper_bound_bps_hz = 0.0;
  std::size_t outer_iterations = 0;
  std::size_t vertex_peak = 0;
  double wall_time_s = 0.0;
  std::optional<double> oracle_bps_hz;
};

/// Topology k uses seed `seed + k` with the random_network defaults (10 m
/// square, 1-2 m links, exponent 4, 1 mW caps, 0.1 uW noise, equal weights).
/// Rows come back ordered by (seed, delta).
std::vector<BenchRow> run_bench(const BenchOptions& opts);

/// Header, one line per row, then a `mean` summary line.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace mapel
