#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "mapel/common.hpp"
#include "mapel/network.hpp"

namespace mapel {

enum class Fixture { G1, G2 };

/// Parses "g1"/"G1"/"g2"/"G2". Throws InvalidInput otherwise.
Fixture parse_fixture(std::string_view name);

/// The two published 4-link gain matrices, with p_max = [0.7, 0.8, 0.9, 1.0] mW,
/// 0.1 uW noise, weights [1/6, 1/6, 1/3, 1/3] and no rate floors.
Network paper_fixture(Fixture which);

/// Random ad hoc topology: transmitters uniform in a square, each receiver at a
/// uniform angle and uniform distance in `link_length_range_m` from its
/// transmitter, path-loss gains G_ij = d(T_i, R_j)^{-path_loss_exponent}.
struct TopologySpec {
  int num_links = 1;
  double area_side_m = 10.0;
  std::pair<double, double> link_length_range_m{1.0, 2.0};
  double path_loss_exponent = 4.0;
  /// Either one entry (shared by all links) or one per link.
  Vector p_max_w = Vector::Constant(1, 1e-3);
  double noise_w = 1e-7;
  bool equal_weights = true;
  double r_min_bps_hz = 0.0;
  std::uint64_t seed = 0;
  /// Replaces the geometric diagonal gains when set (one per link).
  std::optional<Vector> diagonal_override;

  void validate() const;
};

/// Deterministic in the spec. The generator is std::mt19937_64 seeded with
/// `seed`; a uniform draw is the top 53 bits of one output scaled to [0, 1).
/// Per link, in link order, four draws are taken: transmitter x, transmitter
/// y, receiver angle, link length.
///
/// With equal_weights off, weight i is 0.05 plus one extra draw, taken in link
/// order after all links are placed, before normalization.
Network random_network(const TopologySpec& spec);

}  // namespace mapel
