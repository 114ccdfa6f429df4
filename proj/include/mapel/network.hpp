#pragma once

#include <optional>
#include <string_view>

#include "mapel/common.hpp"

namespace mapel {

/// A snapshot of M interfering links.
///
/// `gains()(i, j)` is the channel gain from transmitter i to receiver j, so the
/// interference seen at receiver i is the column sum over j != i of
/// `gains()(j, i) * p_j`. Powers and noise are in watts, rate floors in bps/Hz.
/// Weights are normalized to sum to one on construction. Instances are
/// immutable once built.
class Network {
 public:
  /// Throws InvalidInput if any invariant fails: square gains with positive
  /// diagonal and nonnegative entries, positive noise/caps/weights,
  /// nonnegative rate floors. An empty `r_min` means no rate floors.
  Network(Matrix gains, Vector noise, Vector p_max, Vector weights, Vector r_min = Vector());

  int size() const { return static_cast<int>(noise_.size()); }

  const Matrix& gains() const { return gains_; }
  const Vector& noise() const { return noise_; }
  const Vector& p_max() const { return p_max_; }
  const Vector& weights() const { return weights_; }
  const Vector& r_min() const { return r_min_; }

  double gain(int tx, int rx) const { return gains_(tx, rx); }

  /// 2^{r_min}: the lower corner of the rate-floor region.
  Vector rate_floor() const;
  bool has_rate_floors() const { return (r_min_.array() > 0.0).any(); }

  /// Interference-plus-noise at receiver i.
  double interference(int i, const Vector& p) const;

  bool operator==(const Network& other) const;

 private:
  Matrix gains_;
  Vector noise_;
  Vector p_max_;
  Vector weights_;
  Vector r_min_;
};

Vector sinr(const Network& net, const Vector& p);

/// Sum of w_i log2(1 + sinr_i), in bps/Hz.
double weighted_throughput(const Network& net, const Vector& p);

/// f_i(p) / g_i(p) = 1 + sinr_i(p) componentwise.
Vector fraction_fg(const Network& net, const Vector& p);

/// prod z_i^{w_i}. Throws InvalidInput on a nonpositive component.
double phi(const Network& net, const Vector& z);

/// log2 of phi, computed as a weighted log sum so it never overflows.
double log2_phi(const Network& net, const Vector& z);

enum class FeasibilityReason { Feasible, SpectralRadiusExceedsOne, PowerCapViolated };

std::string_view to_string(FeasibilityReason reason);

struct FeasibilityReport {
  bool feasible = false;
  double spectral_radius_b = 0.0;
  std::optional<Vector> p_hat;
  FeasibilityReason reason = FeasibilityReason::SpectralRadiusExceedsOne;
};

/// Spectral radius at or above this bound counts as infeasible.
inline constexpr double kSpectralRadiusLimit = 1.0 - 1e-10;

/// Decides whether the rate floors are jointly attainable under the power
/// caps, via the Perron root of the normalized cross-gain matrix and the
/// minimal-power vector (I - B)^{-1} u.
FeasibilityReport check_feasibility(const Network& net);

/// The cross-gain matrix B and offset u of the minimal-power fixed point
/// p = B p + u. Exposed for tests.
void rate_floor_system(const Network& net, Matrix& b, Vector& u);

}  // namespace mapel
