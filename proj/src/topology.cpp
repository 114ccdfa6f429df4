#include "mapel/topology.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace mapel {
namespace {

constexpr double kMinDistanceM = 1e-6;

// Top 53 bits of one mt19937_64 output, scaled to [0, 1). Spelled out rather
// than using std::uniform_real_distribution, whose output is not pinned down
// across standard library implementations.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vector fixture_caps() { return Vector{{0.7e-3, 0.8e-3, 0.9e-3, 1.0e-3}}; }
Vector fixture_weights() { return Vector{{1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0}}; }

}  // namespace

Fixture parse_fixture(std::string_view name) {
  if (name == "g1" || name == "G1") return Fixture::G1;
  if (name == "g2" || name == "G2") return Fixture::G2;
  throw InvalidInput("unknown fixture '" + std::string(name) + "' (expected g1 or g2)");
}

Network paper_fixture(Fixture which) {
  Matrix g(4, 4);
  switch (which) {
    case Fixture::G1:
      g << 0.4310, 0.0002, 0.2605, 0.0039,  //
          0.0002, 0.3018, 0.0008, 0.0054,   //
          0.0129, 0.0005, 0.4266, 0.1007,   //
          0.0011, 0.0031, 0.0099, 0.0634;
      break;
    case Fixture::G2:
      g << 0.1476, 0.0105, 0.0018, 0.0402,  //
          0.0034, 0.1784, 0.0013, 0.2472,   //
          0.0014, 0.0017, 0.3164, 0.0046,   //
          0.0048, 0.4526, 0.0012, 0.6290;
      break;
  }
  return Network(g, Vector::Constant(4, 1e-7), fixture_caps(), fixture_weights());
}

void TopologySpec::validate() const {
  if (num_links < 1) throw InvalidInput("num_links must be at least 1");
  if (!(area_side_m > 0.0)) throw InvalidInput("area side must be positive");
  if (!(link_length_range_m.first > 0.0 && link_length_range_m.first <= link_length_range_m.second)) {
    throw InvalidInput("link length range must satisfy 0 < min <= max");
  }
  if (!(path_loss_exponent > 0.0)) throw InvalidInput("path loss exponent must be positive");
  if (p_max_w.size() != 1 && p_max_w.size() != num_links) {
    throw InvalidInput("p_max_w needs one entry or one per link");
  }
  if (diagonal_override && diagonal_override->size() != num_links) {
    throw InvalidInput("diagonal override needs one entry per link");
  }
  if (!(r_min_bps_hz >= 0.0)) throw InvalidInput("r_min must be >= 0");
}

Network random_network(const TopologySpec& spec) {
  spec.validate();
  const int m = spec.num_links;
  std::mt19937_64 rng(spec.seed);

  Matrix tx(m, 2);
  Matrix rx(m, 2);
  const auto [len_lo, len_hi] = spec.link_length_range_m;
  for (int i = 0; i < m; ++i) {
    tx(i, 0) = spec.area_side_m * uniform01(rng);
    tx(i, 1) = spec.area_side_m * uniform01(rng);
    const double angle = 2.0 * std::numbers::pi * uniform01(rng);
    const double length = len_lo + (len_hi - len_lo) * uniform01(rng);
    rx(i, 0) = tx(i, 0) + length * std::cos(angle);
    rx(i, 1) = tx(i, 1) + length * std::sin(angle);
  }

  Matrix gains(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double d = std::max((tx.row(i) - rx.row(j)).norm(), kMinDistanceM);
      gains(i, j) = std::pow(d, -spec.path_loss_exponent);
    }
  }
  if (spec.diagonal_override) gains.diagonal() = *spec.diagonal_override;

  Vector weights = Vector::Ones(m);
  if (!spec.equal_weights) {
    for (int i = 0; i < m; ++i) weights(i) = 0.05 + uniform01(rng);
  }
  const Vector caps = spec.p_max_w.size() == 1 ? Vector::Constant(m, spec.p_max_w(0)) : spec.p_max_w;
  return Network(gains, Vector::Constant(m, spec.noise_w), caps, weights,
                 Vector::Constant(m, spec.r_min_bps_hz));
}

}  // namespace mapel
