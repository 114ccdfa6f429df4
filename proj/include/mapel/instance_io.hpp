#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mapel/network.hpp"
#include "mapel/oracle.hpp"
#include "mapel/projection.hpp"
#include "mapel/solver.hpp"

namespace mapel {

/// Raw instance document, before weight normalization.
struct InstanceFile {
  std::vector<std::vector<double>> gains;
  std::vector<double> noise_w;
  std::vector<double> p_max_w;
  std::vector<double> weights;
  std::vector<double> r_min_bps_hz;

  bool operator==(const InstanceFile&) const = default;
};

/// Parse or validation failure, with the offending field or byte offset.
class InstanceError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

InstanceFile parse_instance(const std::string& text);
InstanceFile read_instance(const std::filesystem::path& path);
/// Pretty JSON with round-trip precision for every number.
std::string serialize_instance(const InstanceFile& inst);

Network to_network(const InstanceFile& inst);
InstanceFile from_network(const Network& net);

nlohmann::json to_json(const MapelResult& result, double delta);
nlohmann::json to_json(const FeasibilityReport& report);
nlohmann::json to_json(const GridResult& result);
nlohmann::json to_json(const MaxMinSinrResult& result, const Network& net);

/// CSV with header `delta,iteration,num_vertices,upper_bound_bps_hz,best_feasible_bps_hz,gap_ratio`.
std::string trace_csv_header();
std::string trace_csv_rows(const MapelResult& result, double delta);

}  // namespace mapel
