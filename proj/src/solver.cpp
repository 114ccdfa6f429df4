#include "mapel/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mapel/numerics.hpp"
#include "mapel/polyblock.hpp"
#include "mapel/projection.hpp"

namespace mapel {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged:
      return "Converged";
    case SolveStatus::VertexCapReached:
      return "VertexCapReached";
    case SolveStatus::IterCapReached:
      return "IterCapReached";
    case SolveStatus::InfeasibleRates:
      return "InfeasibleRates";
  }
  return "?";
}

double epsilon_bound(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidInput("delta must lie in (0, 1)");
  return delta / (1.0 - delta);
}

Vector recover_power(const Network& net, const Vector& z, const Vector& fallback_p) {
  const int m = net.size();
  if (z.size() != m || fallback_p.size() != m) throw InvalidInput("recover_power: length mismatch");

  // (z_i - 1) g_i(p) = G_ii p_i, rearranged to A p = rhs.
  Matrix a(m, m);
  Vector rhs(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a(i, j) = j == i ? net.gain(i, i) : -(z(i) - 1.0) * net.gain(j, i);
    rhs(i) = (z(i) - 1.0) * net.noise()(i);
  }

  Vector p;
  try {
    p = solve_linear(a, rhs);
  } catch (const NumericalError&) {
    return fallback_p;
  }

  constexpr double kRel = 1e-6;
  const Vector floor = net.rate_floor();
  for (int i = 0; i < m; ++i) {
    const double cap = net.p_max()(i);
    if (!std::isfinite(p(i)) || p(i) < -kRel * cap || p(i) > cap * (1.0 + kRel)) return fallback_p;
  }
  for (int i = 0; i < m; ++i) p(i) = p(i) > 0.0 ? std::min(p(i), net.p_max()(i)) : 0.0;
  const Vector ratios = fraction_fg(net, p);
  for (int i = 0; i < m; ++i) {
    if (ratios(i) < floor(i) * (1.0 - kRel)) return fallback_p;
  }
  return p;
}

MapelResult solve(const Network& net, const SolverConfig& cfg, SolveObserver* observer) {
  cfg.validate();
  MapelResult result;
  result.epsilon_bound = epsilon_bound(cfg.delta);

  const FeasibilityReport feasibility = check_feasibility(net);
  if (!feasibility.feasible) {
    result.status = SolveStatus::InfeasibleRates;
    return result;
  }
  const Vector p_init = net.has_rate_floors() ? *feasibility.p_hat : net.p_max();

  Polyblock poly(net, initial_vertex(net));
  result.vertex_peak = poly.size();

  double best_value = -std::numeric_limits<double>::infinity();
  Vector best_z;
  Vector best_witness;
  result.status = SolveStatus::IterCapReached;

  for (std::size_t k = 1; k <= cfg.max_outer_iter; ++k) {
    const auto z = poly.best();
    if (!z) {
      // The corner b clears every rate floor on a feasible instance, so an
      // empty polyblock means an invariant broke somewhere.
      throw NumericalError(check_feasibility(net).feasible
                               ? "polyblock lost every vertex in the rate-floor region"
                               : "rate floors turned infeasible mid-run");
    }
    result.outer_iterations = k;
    result.upper_bound_bps_hz = poly.best_log2_phi();

    const ProjectionResult proj = project(net, *z, cfg, p_init);
    const double lambda = std::min(proj.lambda, 1.0);
    const Vector pi = lambda * *z;

    // The witness realizes f/g >= pi componentwise, and strictly more on links
    // whose ray coordinate fell under the floor of 1. Score the realized point.
    const Vector realized = fraction_fg(net, proj.p_star);
    const double value = log2_phi(net, realized);
    if (value > best_value) {
      best_value = value;
      best_z = realized;
      best_witness = proj.p_star;
    }

    double gap = 0.0;
    for (int i = 0; i < net.size(); ++i) {
      const double zi = std::max((*z)(i), 1e-300);
      gap = std::max(gap, (zi - pi(i)) / zi);
    }
    result.trace.push_back({k, poly.size(), result.upper_bound_bps_hz, best_value, gap});
    if (observer) observer->on_iteration(k, *z, pi, poly.vertex_set());

    if (gap <= cfg.delta) {
      result.status = SolveStatus::Converged;
      break;
    }
    poly.refine(pi);
    result.vertex_peak = std::max(result.vertex_peak, poly.size());
    if (poly.size() > cfg.max_vertices) {
      result.status = SolveStatus::VertexCapReached;
      break;
    }
  }

  result.z_star = best_z;
  result.objective_bps_hz = best_value;
  result.p_star = recover_power(net, best_z, best_witness);
  return result;
}

}  // namespace mapel
