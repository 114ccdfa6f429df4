#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "mapel/oracle.hpp"
#include "mapel/topology.hpp"

using namespace mapel;

TEST_CASE("grid_search examples") {
  SUBCASE("single link") {
    const Network net(Matrix::Ones(1, 1), Vector::Ones(1), Vector::Ones(1), Vector::Ones(1));
    const GridResult r = grid_search(net, 11);
    CHECK(r.p_best(0) == 1.0);
    CHECK(r.objective_bps_hz == doctest::Approx(1.0));
    CHECK(r.points_evaluated == 11);
  }
  SUBCASE("independent links go to full power") {
    Vector caps(2);
    caps << 0.3, 0.7;
    const Network net(Matrix::Identity(2, 2), Vector::Constant(2, 0.1), caps, Vector::Ones(2));
    CHECK(grid_search(net, 9).p_best == caps);
  }
  SUBCASE("dominance pair") {
    // log2(101) / 2 by direct arithmetic; the lexicographic tie-break keeps
    // (0, 1) ahead of (1, 0).
    const Network net(Matrix::Ones(2, 2), Vector::Constant(2, 0.01), Vector::Ones(2),
                      Vector::Constant(2, 0.5));
    const GridResult r = grid_search(net, 501);
    CHECK(r.objective_bps_hz == doctest::Approx(3.3291057413758973).epsilon(1e-12));
    CHECK(r.p_best(0) == 0.0);
    CHECK(r.p_best(1) == 1.0);
  }
}

TEST_CASE("grid_search refusals") {
  TopologySpec spec;
  spec.num_links = 5;
  CHECK_THROWS_AS(grid_search(random_network(spec), 3), InvalidInput);
  spec.num_links = 2;
  CHECK_THROWS_AS(grid_search(random_network(spec), 1), InvalidInput);
  const Network tight(Matrix::Ones(2, 2), Vector::Constant(2, 0.01), Vector::Ones(2),
                      Vector::Ones(2), Vector::Constant(2, 2.0));
  CHECK_THROWS_AS(grid_search(tight, 21), NumericalError);
}

TEST_CASE("property: grid result matches its own point and refines monotonically") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TopologySpec spec;
    spec.num_links = 1 + static_cast<int>(seed % 3);
    spec.seed = seed;
    spec.r_min_bps_hz = seed % 4 == 0 ? 0.2 : 0.0;
    const Network net = random_network(spec);
    if (!check_feasibility(net).feasible) continue;
    const GridResult coarse = grid_search(net, 11);
    const GridResult fine = grid_search(net, 21);
    CHECK(coarse.objective_bps_hz == doctest::Approx(weighted_throughput(net, coarse.p_best)));
    CHECK(fine.objective_bps_hz >= coarse.objective_bps_hz);
    CHECK(fine.objective_bps_hz ==
          doctest::Approx(brute::best_throughput(net.gains(), net.noise(), net.p_max(),
                                                 net.weights(), net.r_min(), 21))
              .epsilon(1e-12));
  }
}
