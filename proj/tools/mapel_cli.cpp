// mapel: command-line front end for the power-control solver.
//
//   mapel solve       --instance FILE | --fixture g1|g2  [--delta X[,Y...]] [--trace FILE]
//   mapel maxmin      --instance FILE | --fixture g1|g2
//   mapel oracle      --instance FILE | --fixture g1|g2  [--resolution N]
//   mapel feasibility --instance FILE | --fixture g1|g2
//   mapel bench       --links N --count N --seed N [--delta X[,Y...]] [--r-min X]
//
// Exit codes: 0 success, 2 parse/validation error, 3 infeasible rate floors,
// 4 resource cap reached.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mapel/bench.hpp"
#include "mapel/instance_io.hpp"
#include "mapel/oracle.hpp"
#include "mapel/projection.hpp"
#include "mapel/solver.hpp"
#include "mapel/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitCap = 4;

struct Options {
  std::string instance;
  std::string fixture;
  std::string deltas = "0.05";
  std::string trace;
  std::string out;
  int resolution = 101;
  int links = 2;
  int count = 5;
  std::uint64_t seed = 0;
  double r_min = 0.0;
  std::size_t max_vertices = mapel::SolverConfig{}.max_vertices;
  bool no_timing = false;
};

std::vector<double> parse_deltas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw mapel::InvalidInput("bad --delta entry '" + item + "'");
    mapel::epsilon_bound(value);  // range check
    out.push_back(value);
  }
  if (out.empty()) throw mapel::InvalidInput("--delta needs at least one value");
  return out;
}

mapel::Network load_network(const Options& opt) {
  if (!opt.instance.empty() && !opt.fixture.empty()) {
    throw mapel::InvalidInput("give either --instance or --fixture, not both");
  }
  if (!opt.fixture.empty()) return mapel::paper_fixture(mapel::parse_fixture(opt.fixture));
  if (opt.instance.empty()) throw mapel::InvalidInput("one of --instance or --fixture is required");
  return mapel::to_network(mapel::read_instance(opt.instance));
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw mapel::InvalidInput("cannot write " + opt.out);
  file << text;
}

mapel::SolverConfig config_from(const Options& opt) {
  mapel::SolverConfig cfg;
  cfg.max_vertices = opt.max_vertices;
  return cfg;
}

int cmd_solve(const Options& opt) {
  const mapel::Network net = load_network(opt);
  const auto deltas = parse_deltas(opt.deltas);
  mapel::SolverConfig cfg = config_from(opt);

  nlohmann::json docs = nlohmann::json::array();
  std::string trace = mapel::trace_csv_header();
  int code = kExitOk;
  for (double delta : deltas) {
    cfg.delta = delta;
    const mapel::MapelResult result = mapel::solve(net, cfg);
    if (result.status == mapel::SolveStatus::InfeasibleRates) {
      std::cerr << "mapel: rate floors are infeasible\n";
      return kExitInfeasible;
    }
    if (result.status != mapel::SolveStatus::Converged) code = kExitCap;
    docs.push_back(mapel::to_json(result, delta));
    trace += mapel::trace_csv_rows(result, delta);
  }
  emit(opt, (docs.size() == 1 ? docs[0] : docs).dump(2) + "\n");
  if (!opt.trace.empty()) {
    std::ofstream file(opt.trace);
    if (!file) throw mapel::InvalidInput("cannot write " + opt.trace);
    file << trace;
  }
  return code;
}

int cmd_maxmin(const Options& opt) {
  const mapel::Network net = load_network(opt);
  const auto result = mapel::maxmin_sinr(net, config_from(opt));
  emit(opt, mapel::to_json(result, net).dump(2) + "\n");
  return result.converged ? kExitOk : kExitCap;
}

int cmd_oracle(const Options& opt) {
  const mapel::Network net = load_network(opt);
  try {
    emit(opt, mapel::to_json(mapel::grid_search(net, opt.resolution)).dump(2) + "\n");
  } catch (const mapel::NumericalError& e) {
    std::cerr << "mapel: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

int cmd_feasibility(const Options& opt) {
  const mapel::Network net = load_network(opt);
  const auto report = mapel::check_feasibility(net);
  emit(opt, mapel::to_json(report).dump(2) + "\n");
  return report.feasible ? kExitOk : kExitInfeasible;
}

int cmd_bench(const Options& opt) {
  mapel::BenchOptions bench;
  bench.links = opt.links;
  bench.count = opt.count;
  bench.seed = opt.seed;
  bench.deltas = parse_deltas(opt.deltas);
  bench.r_min_bps_hz = opt.r_min;
  bench.record_timing = !opt.no_timing;
  bench.base = config_from(opt);
  emit(opt, mapel::bench_csv(mapel::run_bench(bench)));
  return kExitOk;
}

void add_source(CLI::App* cmd, Options& opt) {
  cmd->add_option("--instance", opt.instance, "Instance JSON file");
  cmd->add_option("--fixture", opt.fixture, "Built-in fixture: g1 or g2");
  cmd->add_option("--out", opt.out, "Write the result here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Globally optimal weighted-throughput power control"};
  app.require_subcommand(1);
  Options opt;

  auto* solve = app.add_subcommand("solve", "Maximize weighted throughput");
  add_source(solve, opt);
  solve->add_option("--delta", opt.deltas, "Approximation factor, or a comma list to sweep");
  solve->add_option("--trace", opt.trace, "Write per-iteration CSV trace");
  solve->add_option("--max-vertices", opt.max_vertices, "Abort once the polyblock exceeds this size");

  auto* maxmin = app.add_subcommand("maxmin", "Maximize the minimum SINR");
  add_source(maxmin, opt);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive grid search (M <= 4)");
  add_source(oracle, opt);
  oracle->add_option("--resolution", opt.resolution, "Grid points per axis")->check(CLI::Range(2, 100000));

  auto* feas = app.add_subcommand("feasibility", "Check the rate floors");
  add_source(feas, opt);

  auto* bench = app.add_subcommand("bench", "Random-topology benchmark sweep, CSV output");
  bench->add_option("--links", opt.links, "Links per topology")->check(CLI::PositiveNumber);
  bench->add_option("--count", opt.count, "Number of topologies")->check(CLI::PositiveNumber);
  bench->add_option("--seed", opt.seed, "Seed of the first topology");
  bench->add_option("--delta", opt.deltas, "Approximation factor(s), comma separated");
  bench->add_option("--r-min", opt.r_min, "Rate floor for every link, bps/Hz")->check(CLI::NonNegativeNumber);
  bench->add_option("--max-vertices", opt.max_vertices, "Polyblock size cap per solve");
  bench->add_option("--out", opt.out, "Write the CSV here instead of stdout");
  bench->add_flag("--no-timing", opt.no_timing, "Write 0 for wall time (byte-reproducible output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*solve) return cmd_solve(opt);
    if (*maxmin) return cmd_maxmin(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*feas) return cmd_feasibility(opt);
    if (*bench) return cmd_bench(opt);
  } catch (const mapel::InvalidInput& e) {
    std::cerr << "mapel: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "mapel: internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitInvalid;
}
