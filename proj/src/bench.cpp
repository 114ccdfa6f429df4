#include "mapel/bench.hpp"

#include <chrono>
#include <sstream>

#include "mapel/oracle.hpp"
#include "mapel/solver.hpp"
#include "mapel/topology.hpp"

namespace mapel {

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  if (opts.links < 1) throw InvalidInput("bench needs at least one link");
  if (opts.count < 1) throw InvalidInput("bench needs a positive topology count");
  if (opts.deltas.empty()) throw InvalidInput("bench needs at least one delta");

  std::vector<BenchRow> rows;
  for (int k = 0; k < opts.count; ++k) {
    TopologySpec spec;
    spec.num_links = opts.links;
    spec.r_min_bps_hz = opts.r_min_bps_hz;
    spec.seed = opts.seed + static_cast<std::uint64_t>(k);
    const Network net = random_network(spec);

    std::optional<double> oracle;
    if (opts.links <= 3 && check_feasibility(net).feasible) {
      const int res = opts.links == 3 ? opts.oracle_resolution_3 : opts.oracle_resolution_2;
      // Single links are cheap at any resolution.
      oracle = grid_search(net, opts.links == 1 ? 1001 : res).objective_bps_hz;
    }

    for (double delta : opts.deltas) {
      SolverConfig cfg = opts.base;
      cfg.delta = delta;
      const auto t0 = std::chrono::steady_clock::now();
      const MapelResult res = solve(net, cfg);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

      BenchRow row;
      row.seed = spec.seed;
      row.links = opts.links;
      row.delta = delta;
      row.status = std::string(to_string(res.status));
      row.objective_bps_hz = res.objective_bps_hz;
      row.upper_bound_bps_hz = res.upper_bound_bps_hz;
      row.outer_iterations = res.outer_iterations;
      row.vertex_peak = res.vertex_peak;
      row.wall_time_s = opts.record_timing ? elapsed.count() : 0.0;
      row.oracle_bps_hz = oracle;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out.precision(12);
  out << "seed,M,delta,objective_bps_hz,upper_bound_bps_hz,outer_iterations,vertex_peak,"
         "wall_time_s,oracle_bps_hz\n";
  for (const auto& r : rows) {
    out << r.seed << ',' << r.links << ',' << r.delta << ',' << r.objective_bps_hz << ','
        << r.upper_bound_bps_hz << ',' << r.outer_iterations << ',' << r.vertex_peak << ','
        << r.wall_time_s << ',';
    if (r.oracle_bps_hz) out << *r.oracle_bps_hz;
    out << '\n';
  }

  // One summary line per delta, in first-seen order.
  std::vector<double> deltas;
  for (const auto& r : rows) {
    bool seen = false;
    for (double d : deltas) seen = seen || d == r.delta;
    if (!seen) deltas.push_back(r.delta);
  }
  for (double d : deltas) {
    double obj = 0, ub = 0, iters = 0, peak = 0, wall = 0, oracle = 0;
    int n = 0, n_oracle = 0, links = 0;
    for (const auto& r : rows) {
      if (r.delta != d) continue;
      ++n;
      links = r.links;
      obj += r.objective_bps_hz;
      ub += r.upper_bound_bps_hz;
      iters += static_cast<double>(r.outer_iterations);
      peak += static_cast<double>(r.vertex_peak);
      wall += r.wall_time_s;
      if (r.oracle_bps_hz) {
        oracle += *r.oracle_bps_hz;
        ++n_oracle;
      }
    }
    out << "mean," << links << ',' << d << ',' << obj / n << ',' << ub / n << ',' << iters / n << ','
        << peak / n << ',' << wall / n << ',';
    if (n_oracle > 0) out << oracle / n_oracle;
    out << '\n';
  }
  return out.str();
}

}  // namespace mapel
