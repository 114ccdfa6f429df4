#include "mapel/network.hpp"

#include <cmath>
#include <string>

#include "mapel/numerics.hpp"

namespace mapel {
namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidInput(msg);
}

void check_size(const Network& net, const Vector& v, const char* what) {
  if (v.size() != net.size()) {
    throw InvalidInput(std::string(what) + " has length " + std::to_string(v.size()) +
                       ", network has " + std::to_string(net.size()) + " links");
  }
}

}  // namespace

Network::Network(Matrix gains, Vector noise, Vector p_max, Vector weights, Vector r_min)
    : gains_(std::move(gains)),
      noise_(std::move(noise)),
      p_max_(std::move(p_max)),
      weights_(std::move(weights)),
      r_min_(std::move(r_min)) {
  const auto m = noise_.size();
  require(m >= 1, "network needs at least one link");
  require(gains_.rows() == m && gains_.cols() == m, "gains must be an MxM matrix");
  require(p_max_.size() == m, "p_max length differs from noise length");
  require(weights_.size() == m, "weights length differs from noise length");
  if (r_min_.size() == 0) r_min_ = Vector::Zero(m);
  require(r_min_.size() == m, "r_min length differs from noise length");

  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      require(std::isfinite(gains_(i, j)) && gains_(i, j) >= 0.0, "gains must be finite and >= 0");
    }
    require(gains_(i, i) > 0.0, "diagonal gain of link " + std::to_string(i) + " must be > 0");
    require(std::isfinite(noise_(i)) && noise_(i) > 0.0, "noise must be finite and > 0");
    require(std::isfinite(p_max_(i)) && p_max_(i) > 0.0, "p_max must be finite and > 0");
    require(std::isfinite(weights_(i)) && weights_(i) > 0.0, "weights must be finite and > 0");
    require(std::isfinite(r_min_(i)) && r_min_(i) >= 0.0, "r_min must be finite and >= 0");
  }
  weights_ /= weights_.sum();
}

Vector Network::rate_floor() const {
  return r_min_.unaryExpr([](double r) { return std::exp2(r); });
}

double Network::interference(int i, const Vector& p) const {
  return gains_.col(i).dot(p) - gains_(i, i) * p(i) + noise_(i);
}

bool Network::operator==(const Network& other) const {
  return gains_ == other.gains_ && noise_ == other.noise_ && p_max_ == other.p_max_ &&
         weights_ == other.weights_ && r_min_ == other.r_min_;
}

Vector sinr(const Network& net, const Vector& p) {
  check_size(net, p, "power vector");
  Vector out(net.size());
  for (int i = 0; i < net.size(); ++i) {
    out(i) = net.gain(i, i) * p(i) / net.interference(i, p);
  }
  return out;
}

double weighted_throughput(const Network& net, const Vector& p) {
  const Vector gamma = sinr(net, p);
  double total = 0.0;
  for (int i = 0; i < net.size(); ++i) total += net.weights()(i) * std::log2(1.0 + gamma(i));
  return total;
}

Vector fraction_fg(const Network& net, const Vector& p) {
  check_size(net, p, "power vector");
  Vector out(net.size());
  for (int i = 0; i < net.size(); ++i) {
    const double g = net.interference(i, p);
    out(i) = (net.gain(i, i) * p(i) + g) / g;
  }
  return out;
}

double log2_phi(const Network& net, const Vector& z) {
  check_size(net, z, "z");
  double total = 0.0;
  for (int i = 0; i < net.size(); ++i) {
    if (!(z(i) > 0.0)) throw InvalidInput("phi needs strictly positive z");
    total += net.weights()(i) * std::log2(z(i));
  }
  return total;
}

double phi(const Network& net, const Vector& z) { return std::exp2(log2_phi(net, z)); }

std::string_view to_string(FeasibilityReason reason) {
  switch (reason) {
    case FeasibilityReason::Feasible:
      return "Feasible";
    case FeasibilityReason::SpectralRadiusExceedsOne:
      return "SpectralRadiusExceedsOne";
    case FeasibilityReason::PowerCapViolated:
      return "PowerCapViolated";
  }
  return "?";
}

void rate_floor_system(const Network& net, Matrix& b, Vector& u) {
  const int m = net.size();
  b = Matrix::Zero(m, m);
  u = Vector::Zero(m);
  for (int i = 0; i < m; ++i) {
    const double gamma_min = std::exp2(net.r_min()(i)) - 1.0;
    const double gii = net.gain(i, i);
    for (int j = 0; j < m; ++j) {
      if (j != i) b(i, j) = gamma_min * net.gain(j, i) / gii;
    }
    u(i) = gamma_min * net.noise()(i) / gii;
  }
}

FeasibilityReport check_feasibility(const Network& net) {
  Matrix b;
  Vector u;
  rate_floor_system(net, b, u);

  FeasibilityReport report;
  report.spectral_radius_b = spectral_radius(b);
  if (report.spectral_radius_b >= kSpectralRadiusLimit) {
    report.reason = FeasibilityReason::SpectralRadiusExceedsOne;
    return report;
  }

  const Matrix a = Matrix::Identity(net.size(), net.size()) - b;
  Vector p_hat = solve_linear(a, u);
  bool within = true;
  for (int i = 0; i < net.size(); ++i) {
    if (p_hat(i) < 0.0 || p_hat(i) > net.p_max()(i)) within = false;
  }
  report.p_hat = std::move(p_hat);
  report.feasible = within;
  report.reason = within ? FeasibilityReason::Feasible : FeasibilityReason::PowerCapViolated;
  return report;
}

}  // namespace mapel
