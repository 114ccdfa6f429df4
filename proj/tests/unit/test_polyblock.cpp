#include <doctest.h>

#include <cmath>
#include <random>

#include "mapel/polyblock.hpp"
#include "mapel/projection.hpp"
#include "mapel/topology.hpp"

using namespace mapel;

namespace {

Vector v2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

VertexSet set_of(std::initializer_list<Vector> vs) { return VertexSet(std::vector<Vector>(vs)); }

Network pair(double r_min = 0.0) {
  return Network(Matrix::Identity(2, 2), Vector::Ones(2), Vector::Ones(2), Vector::Ones(2),
                 Vector::Constant(2, r_min));
}

bool same_vertices(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("initial_vertex examples") {
  const Network one(Matrix::Ones(1, 1), Vector::Ones(1), Vector::Ones(1), Vector::Ones(1));
  CHECK(initial_vertex(one)(0) == doctest::Approx(2.0));

  // Per-link hand evaluation, frozen from tests/oracles/derive_values.py.
  const Vector b = initial_vertex(paper_fixture(Fixture::G1));
  CHECK(b(0) == doctest::Approx(3018.0).epsilon(1e-12));
  CHECK(b(1) == doctest::Approx(2415.4).epsilon(1e-12));
  CHECK(b(2) == doctest::Approx(3840.4).epsilon(1e-12));
  CHECK(b(3) == doctest::Approx(635.0).epsilon(1e-12));

  const Network loud(Matrix::Identity(2, 2), Vector::Constant(2, 1e12), Vector::Ones(2),
                     Vector::Ones(2));
  CHECK((initial_vertex(loud) - Vector::Ones(2)).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("prune_improper examples") {
  const VertexSet pruned = prune_improper(set_of({v2(1, 2), v2(2, 1), v2(1, 1)}));
  CHECK(same_vertices(pruned, set_of({v2(1, 2), v2(2, 1)})));
  CHECK(pruned.is_proper());
  CHECK(same_vertices(prune_improper(set_of({v2(1, 2), v2(2, 1)})), set_of({v2(1, 2), v2(2, 1)})));
  CHECK(same_vertices(prune_improper(set_of({v2(3, 3), v2(3, 3)})), set_of({v2(3, 3)})));
  CHECK_FALSE(set_of({v2(3, 3), v2(3, 3)}).is_proper());
}

TEST_CASE("replace_vertex examples") {
  CHECK(same_vertices(replace_vertex(set_of({v2(4, 4)}), v2(4, 4), v2(2, 3)),
                      set_of({v2(2, 4), v2(4, 3)})));
  const VertexSet two = replace_vertex(set_of({v2(4, 4), v2(1, 5)}), v2(4, 4), v2(2, 3));
  CHECK(two.size() == 3);
  CHECK(two.covers(v2(1, 5)));
  CHECK(two.covers(v2(2, 4)));
  CHECK(two.covers(v2(4, 3)));
  CHECK(two.is_proper());

  // A projection equal to the vertex leaves the set as it was.
  CHECK(same_vertices(replace_vertex(set_of({v2(4, 4)}), v2(4, 4), v2(4, 4)), set_of({v2(4, 4)})));

  CHECK_THROWS_AS(replace_vertex(set_of({v2(4, 4)}), v2(3, 3), v2(2, 2)), InvalidInput);
  CHECK_THROWS_AS(replace_vertex(set_of({v2(4, 4)}), v2(4, 4), v2(5, 2)), InvalidInput);
}

TEST_CASE("select_best examples") {
  const auto tie = select_best(set_of({v2(4, 1), v2(2, 2)}), pair());
  REQUIRE(tie.has_value());
  CHECK(*tie == v2(4, 1));

  const auto best = select_best(set_of({v2(9, 1), v2(4, 4)}), pair());
  REQUIRE(best.has_value());
  CHECK(*best == v2(4, 4));

  CHECK_FALSE(select_best(set_of({v2(4, 1), v2(2, 2)}), pair(std::log2(3.0))).has_value());
}

TEST_CASE("property: prune is idempotent and refinement only shrinks boxes") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coord(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 3;
    std::vector<Vector> raw;
    for (int k = 0; k < 12; ++k) {
      Vector v(m);
      for (int i = 0; i < m; ++i) v(i) = coord(rng);
      raw.push_back(v);
    }
    const VertexSet once = prune_improper(VertexSet(raw));
    CHECK(once.is_proper());
    CHECK(same_vertices(prune_improper(once), once));
    for (const Vector& v : raw) CHECK(once.covers(v));

    const Vector& target = once[0];
    Vector proj = target;
    for (int i = 0; i < m; ++i) proj(i) = std::max(0.5, target(i) - coord(rng) / 2.0);
    const VertexSet next = replace_vertex(once, target, proj);
    CHECK(next.is_proper());
    for (const Vector& v : next.vertices()) CHECK(once.covers(v));
  }
}

TEST_CASE("Polyblock agrees with the reference replace/select path") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    TopologySpec spec;
    spec.num_links = 2 + static_cast<int>(seed % 3);
    spec.seed = seed;
    spec.r_min_bps_hz = seed % 2 == 0 ? 0.3 : 0.0;
    const Network net = random_network(spec);
    if (!check_feasibility(net).feasible) continue;

    Polyblock fast(net, initial_vertex(net));
    VertexSet slow({initial_vertex(net)});
    for (int k = 0; k < 60; ++k) {
      const auto a = fast.best();
      const auto b = select_best(slow, net);
      REQUIRE(a.has_value() == b.has_value());
      if (!a) break;
      REQUIRE(*a == *b);
      CHECK(fast.best_log2_phi() == log2_phi(net, *a));
      const Vector proj = std::min(project(net, *a).lambda, 1.0) * *a;
      fast.refine(proj);
      slow = replace_vertex(slow, *b, proj);

      // The fast structure drops vertices outside the floor region; the
      // reference keeps them but never selects them.
      std::vector<Vector> kept;
      for (const Vector& v : slow.vertices()) {
        if (dominates(v, net.rate_floor())) kept.push_back(v);
      }
      CHECK(same_vertices(fast.vertex_set(), VertexSet(kept)));
      CHECK(fast.vertex_set().is_proper());
    }
  }
}

TEST_CASE("Polyblock input checks") {
  const Network net = pair();
  CHECK_THROWS_AS(Polyblock(net, Vector::Ones(3)), InvalidInput);
  Polyblock poly(net, v2(4, 4));
  CHECK_THROWS_AS(poly.refine(v2(5, 1)), InvalidInput);
  poly.refine(v2(2, 3));
  CHECK(poly.size() == 2);
}
