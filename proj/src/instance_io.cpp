#include "mapel/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mapel {
namespace {

using nlohmann::json;

std::vector<double> number_array(const json& doc, const std::string& field, bool required) {
  if (!doc.contains(field)) {
    if (required) throw InstanceError("missing field '" + field + "'");
    return {};
  }
  const json& arr = doc.at(field);
  if (!arr.is_array()) throw InstanceError("field '" + field + "' must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw InstanceError("field '" + field + "[" + std::to_string(i) + "]' must be a number");
    }
    out.push_back(arr[i].get<double>());
  }
  return out;
}

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

json vec(const Vector& v) { return to_std(v); }

// JSON has no infinities; a run that never projected has no objective.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void check_length(const std::vector<double>& v, std::size_t m, const char* field) {
  if (v.size() != m) {
    throw InstanceError(std::string("field '") + field + "' has " + std::to_string(v.size()) +
                        " entries, expected " + std::to_string(m));
  }
}

void check_entries(const std::vector<double>& v, const char* field, bool zero_ok) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) || v[i] < 0.0 || (!zero_ok && v[i] == 0.0)) {
      throw InstanceError(std::string("field '") + field + "[" + std::to_string(i) + "]' must be " +
                          (zero_ok ? "nonnegative" : "positive"));
    }
  }
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InstanceError("instance must be a JSON object");

  InstanceFile inst;
  if (!doc.contains("gains")) throw InstanceError("missing field 'gains'");
  const json& gains = doc.at("gains");
  if (!gains.is_array() || gains.empty()) throw InstanceError("field 'gains' must be a nonempty array");
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (!gains[i].is_array()) {
      throw InstanceError("field 'gains[" + std::to_string(i) + "]' must be an array");
    }
    std::vector<double> row;
    for (std::size_t j = 0; j < gains[i].size(); ++j) {
      if (!gains[i][j].is_number()) {
        throw InstanceError("field 'gains[" + std::to_string(i) + "][" + std::to_string(j) +
                            "]' must be a number");
      }
      row.push_back(gains[i][j].get<double>());
    }
    if (row.size() != gains.size()) {
      throw InstanceError("field 'gains[" + std::to_string(i) + "]' has " + std::to_string(row.size()) +
                          " entries, expected " + std::to_string(gains.size()));
    }
    inst.gains.push_back(std::move(row));
  }
  const std::size_t m = inst.gains.size();
  inst.noise_w = number_array(doc, "noise_w", true);
  inst.p_max_w = number_array(doc, "p_max_w", true);
  inst.weights = number_array(doc, "weights", true);
  inst.r_min_bps_hz = number_array(doc, "r_min_bps_hz", false);
  if (inst.r_min_bps_hz.empty()) inst.r_min_bps_hz.assign(m, 0.0);
  check_length(inst.noise_w, m, "noise_w");
  check_length(inst.p_max_w, m, "p_max_w");
  check_length(inst.weights, m, "weights");
  check_length(inst.r_min_bps_hz, m, "r_min_bps_hz");

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double g = inst.gains[i][j];
      if (!std::isfinite(g) || g < 0.0 || (i == j && g <= 0.0)) {
        throw InstanceError("field 'gains[" + std::to_string(i) + "][" + std::to_string(j) + "]' must be " +
                            (i == j ? "positive" : "nonnegative"));
      }
    }
  }
  check_entries(inst.noise_w, "noise_w", false);
  check_entries(inst.p_max_w, "p_max_w", false);
  check_entries(inst.weights, "weights", false);
  check_entries(inst.r_min_bps_hz, "r_min_bps_hz", true);
  return inst;
}

InstanceFile read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const InstanceFile& inst) {
  json doc;
  doc["gains"] = inst.gains;
  doc["noise_w"] = inst.noise_w;
  doc["p_max_w"] = inst.p_max_w;
  doc["weights"] = inst.weights;
  doc["r_min_bps_hz"] = inst.r_min_bps_hz;
  return doc.dump(2) + "\n";
}

Network to_network(const InstanceFile& inst) {
  const auto m = static_cast<Eigen::Index>(inst.gains.size());
  Matrix gains(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) gains(i, j) = inst.gains[i][j];
  }
  try {
    return Network(gains, to_vector(inst.noise_w), to_vector(inst.p_max_w), to_vector(inst.weights),
                   to_vector(inst.r_min_bps_hz));
  } catch (const InvalidInput& e) {
    throw InstanceError(std::string("invalid instance: ") + e.what());
  }
}

InstanceFile from_network(const Network& net) {
  InstanceFile inst;
  for (int i = 0; i < net.size(); ++i) inst.gains.push_back(to_std(net.gains().row(i).transpose()));
  inst.noise_w = to_std(net.noise());
  inst.p_max_w = to_std(net.p_max());
  inst.weights = to_std(net.weights());
  inst.r_min_bps_hz = to_std(net.r_min());
  return inst;
}

nlohmann::json to_json(const MapelResult& result, double delta) {
  json doc;
  doc["status"] = std::string(to_string(result.status));
  doc["delta"] = delta;
  doc["epsilon_bound"] = result.epsilon_bound;
  if (result.status == SolveStatus::InfeasibleRates) return doc;
  doc["p_star_w"] = vec(result.p_star);
  doc["z_star"] = vec(result.z_star);
  doc["objective_bps_hz"] = number_or_null(result.objective_bps_hz);
  doc["upper_bound_bps_hz"] = number_or_null(result.upper_bound_bps_hz);
  doc["outer_iterations"] = result.outer_iterations;
  doc["vertex_peak"] = result.vertex_peak;
  return doc;
}

nlohmann::json to_json(const FeasibilityReport& report) {
  json doc;
  doc["feasible"] = report.feasible;
  doc["reason"] = std::string(to_string(report.reason));
  doc["spectral_radius_b"] = report.spectral_radius_b;
  doc["p_hat_w"] = report.p_hat ? vec(*report.p_hat) : json(nullptr);
  return doc;
}

nlohmann::json to_json(const GridResult& result) {
  json doc;
  doc["p_best_w"] = vec(result.p_best);
  doc["objective_bps_hz"] = result.objective_bps_hz;
  doc["points_evaluated"] = result.points_evaluated;
  return doc;
}

nlohmann::json to_json(const MaxMinSinrResult& result, const Network& net) {
  const Vector gamma = sinr(net, result.p);
  json doc;
  doc["p_w"] = vec(result.p);
  doc["min_sinr"] = result.min_sinr;
  doc["min_sinr_db"] = 10.0 * std::log10(result.min_sinr);
  doc["sinr"] = vec(gamma);
  doc["sinr_db"] = vec(gamma.unaryExpr([](double g) { return 10.0 * std::log10(g); }));
  doc["iterations"] = result.iterations;
  doc["converged"] = result.converged;
  return doc;
}

std::string trace_csv_header() {
  return "delta,iteration,num_vertices,upper_bound_bps_hz,best_feasible_bps_hz,gap_ratio\n";
}

std::string trace_csv_rows(const MapelResult& result, double delta) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& row : result.trace) {
    out << delta << ',' << row.iteration << ',' << row.num_vertices << ',' << row.upper_bound_bps_hz
        << ',' << row.best_feasible_bps_hz << ',' << row.gap_ratio << '\n';
  }
  return out.str();
}

}  // namespace mapel
