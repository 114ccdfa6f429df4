#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mapel/bench.hpp"
#include "mapel/instance_io.hpp"
#include "mapel/topology.hpp"

using namespace mapel;

namespace {

std::string fixture(const std::string& name) {
  return std::string(MAPEL_FIXTURE_DIR) + "/" + name + ".json";
}

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InstanceError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixture files match the built-in fixtures") {
  CHECK(to_network(read_instance(fixture("g1"))) == paper_fixture(Fixture::G1));
  CHECK(to_network(read_instance(fixture("g2"))) == paper_fixture(Fixture::G2));
  const Network one = to_network(read_instance(fixture("single_link")));
  CHECK(one.size() == 1);
  CHECK(one.r_min().isZero());
  CHECK_THROWS_AS(read_instance(fixture("does_not_exist")), InstanceError);
}

TEST_CASE("parse errors name the offending field") {
  CHECK(error_of("[1, 2]").find("object") != std::string::npos);
  CHECK(error_of("{").find("JSON") != std::string::npos);
  CHECK(error_of(R"({"noise_w": [1], "p_max_w": [1], "weights": [1]})").find("gains") !=
        std::string::npos);
  CHECK(error_of(R"({"gains": [[1]], "noise_w": ["x"], "p_max_w": [1], "weights": [1]})")
            .find("noise_w[0]") != std::string::npos);
  CHECK(error_of(R"({"gains": [[1, 0], [0]], "noise_w": [1, 1], "p_max_w": [1, 1],
                     "weights": [1, 1]})")
            .find("gains[1]") != std::string::npos);
  CHECK(error_of(R"({"gains": [[1]], "noise_w": [1, 2], "p_max_w": [1], "weights": [1]})")
            .find("noise_w") != std::string::npos);
  CHECK_FALSE(error_of(R"({"gains": [[0]], "noise_w": [1], "p_max_w": [1], "weights": [1]})")
                  .empty());
  CHECK_FALSE(error_of(R"({"gains": [[1]], "noise_w": [1], "p_max_w": [1], "weights": [1],
                           "r_min_bps_hz": [-1]})")
                  .empty());
}

TEST_CASE("property: serialize then parse is the identity") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    TopologySpec spec;
    spec.num_links = 1 + static_cast<int>(seed % 5);
    spec.seed = seed;
    spec.equal_weights = seed % 2 == 1;
    spec.r_min_bps_hz = unit(rng);
    const InstanceFile inst = from_network(random_network(spec));
    const InstanceFile back = parse_instance(serialize_instance(inst));
    CHECK(back == inst);
    const Network net = random_network(spec);
    const Network again = to_network(back);
    CHECK(again.gains() == net.gains());
    CHECK(again.noise() == net.noise());
    CHECK(again.r_min() == net.r_min());
    CHECK(again.weights().isApprox(net.weights(), 1e-15));
  }
}

TEST_CASE("result documents and the trace CSV") {
  const Network g1 = paper_fixture(Fixture::G1);
  SolverConfig cfg;
  cfg.delta = 0.2;
  const MapelResult r = solve(g1, cfg);
  const nlohmann::json doc = to_json(r, 0.2);
  CHECK(doc["status"] == "Converged");
  CHECK(doc["objective_bps_hz"].get<double>() == r.objective_bps_hz);
  CHECK(doc["p_star_w"].size() == 4);

  const std::string rows = trace_csv_rows(r, 0.2);
  CHECK(trace_csv_header() ==
        "delta,iteration,num_vertices,upper_bound_bps_hz,best_feasible_bps_hz,gap_ratio\n");
  CHECK(static_cast<std::size_t>(std::count(rows.begin(), rows.end(), '\n')) == r.trace.size());

  const nlohmann::json infeasible = to_json(check_feasibility(to_network(
      read_instance(fixture("infeasible_rates")))));
  CHECK(infeasible["feasible"] == false);
  CHECK(infeasible["reason"] == "SpectralRadiusExceedsOne");
}

TEST_CASE("bench is deterministic and single links hit the closed form") {
  BenchOptions opts;
  opts.links = 1;
  opts.count = 3;
  opts.seed = 5;
  opts.record_timing = false;
  const auto rows = run_bench(opts);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    TopologySpec spec;
    spec.num_links = 1;
    spec.seed = row.seed;
    const Network net = random_network(spec);
    const double closed = std::log2(1.0 + net.gain(0, 0) * 1e-3 / 1e-7);
    CHECK(row.objective_bps_hz == doctest::Approx(closed).epsilon(1e-9));
    REQUIRE(row.oracle_bps_hz.has_value());
    CHECK(*row.oracle_bps_hz == doctest::Approx(closed).epsilon(1e-9));
  }
  CHECK(bench_csv(rows) == bench_csv(run_bench(opts)));
  CHECK(bench_csv(rows).rfind("seed,M,delta,objective_bps_hz,upper_bound_bps_hz,outer_iterations,"
                              "vertex_peak,wall_time_s,oracle_bps_hz",
                              0) == 0);
}
