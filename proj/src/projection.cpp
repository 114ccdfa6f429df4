#include "mapel/projection.hpp"

#include <cmath>
#include <string>

#include "mapel/numerics.hpp"

namespace mapel {
namespace {

// max_p min_i num_i(p) / den_i(p) over a polytope, with affine num/den rows
// (M coefficients then the constant) and den > 0 on the polytope.
struct FractionalProgram {
  Matrix num;
  Matrix den;
  Vector lower;
  Vector upper;
  Matrix extra;
};

double min_ratio(const FractionalProgram& fp, const Vector& p) {
  const Eigen::Index m = p.size();
  const Vector n = fp.num.leftCols(m) * p + fp.num.col(m);
  const Vector d = fp.den.leftCols(m) * p + fp.den.col(m);
  return (n.array() / d.array()).minCoeff();
}

struct DinkelbachOutcome {
  double lambda;
  Vector p;
  std::size_t iterations;
  bool converged;
  std::vector<double> trace;
};

// Dinkelbach-type iteration for max-min ratios: lambda_j is the ratio at the
// current point p_j, and the next point maximizes
//   min_i (num_i(p) - lambda_j den_i(p)) / den_i(p_j).
// Scaling each row by its denominator at p_j is what makes the ratio sequence
// converge superlinearly rather than linearly, and it makes the LP optimum a
// dimensionless ratio gap. That optimum is nonnegative since p_j is feasible
// for the LP, and zero exactly when lambda_j is optimal. Stops when it drops
// to `tol` or the ratio stops increasing in floating point.
DinkelbachOutcome dinkelbach(const FractionalProgram& fp, const Vector& p0, double tol,
                             std::size_t max_iter, double lp_tol) {
  const Eigen::Index m = p0.size();
  DinkelbachOutcome out{min_ratio(fp, p0), p0, 0, false, {}};
  out.trace.push_back(out.lambda);

  MaxMinLpProblem lp{Matrix(), fp.lower, fp.upper, fp.extra};
  while (out.iterations < max_iter) {
    const Vector den_at_p = fp.den.leftCols(m) * out.p + fp.den.col(m);
    lp.objective_rows = (fp.num - out.lambda * fp.den).array().colwise() / den_at_p.array();
    const MaxMinLpSolution sol = solve_maxmin_lp(lp, lp_tol);
    if (sol.status != LpStatus::Optimal) {
      throw NumericalError("projection LP lost feasibility; rate floors should have been checked");
    }
    ++out.iterations;

    const double next = min_ratio(fp, sol.p_opt);
    const bool improved = next > out.lambda;
    if (improved) {
      out.lambda = next;
      out.p = sol.p_opt;
      out.trace.push_back(next);
    }
    if (sol.value <= tol || !improved) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

Vector rate_row(const Network& net, int i, double floor) {
  const int m = net.size();
  Vector row(m + 1);
  for (int j = 0; j < m; ++j) row(j) = (j == i ? 1.0 : 1.0 - floor) * net.gain(j, i);
  row(m) = (1.0 - floor) * net.noise()(i);
  return row;
}

Matrix rate_rows(const Network& net) {
  const Vector floor = net.rate_floor();
  int count = 0;
  for (int i = 0; i < net.size(); ++i) count += net.r_min()(i) > 0.0;
  Matrix rows(count, net.size() + 1);
  int r = 0;
  for (int i = 0; i < net.size(); ++i) {
    if (net.r_min()(i) > 0.0) rows.row(r++) = rate_row(net, i, floor(i)).transpose();
  }
  return rows;
}

// Row i of the interference-plus-noise form g_i(p), scaled by `scale`.
Eigen::RowVectorXd interference_row(const Network& net, int i, double scale) {
  const int m = net.size();
  Eigen::RowVectorXd out(m + 1);
  for (int j = 0; j < m; ++j) out(j) = j == i ? 0.0 : scale * net.gain(j, i);
  out(m) = scale * net.noise()(i);
  return out;
}

void check_start(const Network& net, const Vector& p) {
  if (p.size() != net.size()) throw InvalidInput("starting point has the wrong length");
  const Vector floor = net.rate_floor();
  const Vector ratios = fraction_fg(net, p);
  for (int i = 0; i < net.size(); ++i) {
    const double cap = net.p_max()(i);
    if (p(i) < -1e-12 * cap || p(i) > cap * (1.0 + 1e-12)) {
      throw InvalidInput("starting point leaves the power box at link " + std::to_string(i));
    }
    if (ratios(i) < floor(i) * (1.0 - 1e-9)) {
      throw InvalidInput("starting point misses the rate floor of link " + std::to_string(i));
    }
  }
}

}  // namespace

ProjectionResult project(const Network& net, const Vector& z, const SolverConfig& cfg,
                         const Vector& p_init) {
  const int m = net.size();
  if (z.size() != m) throw InvalidInput("z has the wrong length");
  if (!(z.array() > 0.0).all()) throw InvalidInput("z must be strictly positive");
  check_start(net, p_init);

  FractionalProgram fp{Matrix(m, m + 1), Matrix(m, m + 1), Vector::Zero(m), net.p_max(),
                       rate_rows(net)};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) fp.num(i, j) = net.gain(j, i);
    fp.num(i, m) = net.noise()(i);
    fp.den.row(i) = interference_row(net, i, z(i));
  }

  const Vector start = p_init.cwiseMax(0.0).cwiseMin(net.p_max());
  auto run = dinkelbach(fp, start, cfg.proj_tol, cfg.proj_max_iter, cfg.lp_tol);
  return {run.lambda, std::move(run.p), run.iterations, run.converged, std::move(run.trace)};
}

ProjectionResult project(const Network& net, const Vector& z, const SolverConfig& cfg) {
  cfg.validate();
  if (!net.has_rate_floors()) return project(net, z, cfg, net.p_max());
  const FeasibilityReport report = check_feasibility(net);
  if (!report.feasible) throw InvalidInput("rate floors are infeasible; nothing to project onto");
  return project(net, z, cfg, *report.p_hat);
}

MaxMinSinrResult maxmin_sinr(const Network& net, const SolverConfig& cfg) {
  cfg.validate();
  const int m = net.size();
  // Numerator is the received signal alone: this maximizes SINR, not 1 + SINR.
  FractionalProgram fp{Matrix::Zero(m, m + 1), Matrix(m, m + 1), Vector::Zero(m), net.p_max(),
                       Matrix(0, m + 1)};
  for (int i = 0; i < m; ++i) {
    fp.num(i, i) = net.gain(i, i);
    fp.den.row(i) = interference_row(net, i, 1.0);
  }
  auto run = dinkelbach(fp, net.p_max(), cfg.proj_tol, cfg.proj_max_iter, cfg.lp_tol);
  return {std::move(run.p), run.lambda, run.iterations, run.converged};
}

}  // namespace mapel
