#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mapel/numerics.hpp"

namespace mapel {
namespace {

constexpr std::size_t kMaxPivots = 100000;

// Dense two-phase tableau simplex for  max c.y  s.t.  A y <= b, y >= 0,
// with Bland's rule on both entering and leaving choices.
//
// Layout: rows 0..m-1 are constraints, row m the phase-2 objective and row
// m+1 the phase-1 objective. Column n is the auxiliary variable (index -1)
// and column n+1 the right-hand side.
class Tableau {
 public:
  enum class Outcome { Optimal, Infeasible, Unbounded };

  Tableau(const Matrix& a, const Vector& b, const Vector& c, double eps)
      : m_(static_cast<int>(a.rows())),
        n_(static_cast<int>(a.cols())),
        eps_(eps),
        basis_(m_),
        nonbasis_(n_ + 1),
        d_(Matrix::Zero(m_ + 2, n_ + 2)) {
    d_.topLeftCorner(m_, n_) = a;
    for (int i = 0; i < m_; ++i) {
      basis_[i] = n_ + i;
      d_(i, n_) = -1.0;
      d_(i, n_ + 1) = b(i);
    }
    for (int j = 0; j < n_; ++j) {
      nonbasis_[j] = j;
      d_(m_, j) = -c(j);
    }
    nonbasis_[n_] = -1;
    d_(m_ + 1, n_) = 1.0;
  }

  Outcome solve(Vector& y) {
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_(i, n_ + 1) < d_(r, n_ + 1)) r = i;
    }
    if (m_ > 0 && d_(r, n_ + 1) < -eps_) {
      pivot(r, n_);
      if (!run(1) || d_(m_ + 1, n_ + 1) < -eps_) return Outcome::Infeasible;
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
          if (s == -1 || std::abs(d_(i, j)) > std::abs(d_(i, s))) s = j;
        }
        // An all-zero row means the auxiliary sits at zero in a redundant row.
        if (std::abs(d_(i, s)) > eps_) pivot(i, s);
      }
    }
    if (!run(2)) return Outcome::Unbounded;
    y = Vector::Zero(n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= 0 && basis_[i] < n_) y(basis_[i]) = d_(i, n_ + 1);
    }
    return Outcome::Optimal;
  }

 private:
  void pivot(int r, int s) {
    if (++pivots_ > kMaxPivots) {
      throw NumericalError("simplex exceeded " + std::to_string(kMaxPivots) + " pivots");
    }
    const double inv = 1.0 / d_(r, s);
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r) continue;
      const double factor = d_(i, s) * inv;
      if (factor == 0.0) continue;
      for (int j = 0; j < n_ + 2; ++j) {
        if (j != s) d_(i, j) -= d_(r, j) * factor;
      }
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) d_(r, j) *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) d_(i, s) *= -inv;
    }
    d_(r, s) = inv;
    std::swap(basis_[r], nonbasis_[s]);
  }

  bool run(int phase) {
    const int obj = phase == 1 ? m_ + 1 : m_;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (phase == 2 && nonbasis_[j] == -1) continue;
        if (d_(obj, j) < -eps_ && (s == -1 || nonbasis_[j] < nonbasis_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m_; ++i) {
        if (d_(i, s) <= eps_) continue;
        const double ratio = d_(i, n_ + 1) / d_(i, s);
        if (r == -1 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[r])) {
          r = i;
          best_ratio = ratio;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  double eps_;
  std::vector<int> basis_;
  std::vector<int> nonbasis_;
  Matrix d_;
  std::size_t pivots_ = 0;
};

double row_scale(const Eigen::Ref<const Eigen::RowVectorXd>& coef, double constant) {
  const double s = std::max(coef.size() ? coef.cwiseAbs().maxCoeff() : 0.0, std::abs(constant));
  return s > 0.0 ? s : 1.0;
}

}  // namespace

// Variables are rescaled to s in [0, 1]^M via p = lower + width * s, and the
// free epigraph variable is split as t = R (tau_plus - tau_minus), where R is
// the largest coefficient over the objective rows. Each extra row is scaled
// by its own largest coefficient. After scaling every tableau entry is O(1),
// which keeps `tol` meaningful regardless of the units of p.
MaxMinLpSolution solve_maxmin_lp(const MaxMinLpProblem& prob, double tol) {
  const Eigen::Index m = prob.box_lower.size();
  if (prob.box_upper.size() != m) throw InvalidInput("box bounds differ in length");
  if (prob.objective_rows.rows() < 1 || prob.objective_rows.cols() != m + 1) {
    throw InvalidInput("objective rows must be a nonempty K x (M+1) matrix");
  }
  if (prob.extra_rows.rows() > 0 && prob.extra_rows.cols() != m + 1) {
    throw InvalidInput("extra rows must be a K x (M+1) matrix");
  }
  if ((prob.box_lower.array() > prob.box_upper.array()).any()) {
    throw InvalidInput("box lower bound exceeds upper bound");
  }
  if (!(tol > 0.0)) throw InvalidInput("LP tolerance must be positive");

  const Vector width = prob.box_upper - prob.box_lower;
  const Eigen::Index k_obj = prob.objective_rows.rows();
  const Eigen::Index k_extra = prob.extra_rows.rows();

  Matrix obj_coef(k_obj, m);
  Vector obj_const(k_obj);
  for (Eigen::Index i = 0; i < k_obj; ++i) {
    const auto a = prob.objective_rows.row(i).head(m);
    obj_coef.row(i) = a.cwiseProduct(width.transpose());
    obj_const(i) = a.dot(prob.box_lower) + prob.objective_rows(i, m);
  }
  double big_r = std::max(obj_coef.size() ? obj_coef.cwiseAbs().maxCoeff() : 0.0,
                          obj_const.cwiseAbs().maxCoeff());
  if (!(big_r > 0.0)) big_r = 1.0;

  const Eigen::Index n = m + 2;
  const Eigen::Index rows = k_obj + k_extra + m;
  Matrix a = Matrix::Zero(rows, n);
  Vector b = Vector::Zero(rows);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < k_obj; ++i, ++r) {
    a.row(r).head(m) = -obj_coef.row(i) / big_r;
    a(r, m) = 1.0;
    a(r, m + 1) = -1.0;
    b(r) = obj_const(i) / big_r;
  }
  for (Eigen::Index k = 0; k < k_extra; ++k, ++r) {
    const auto e = prob.extra_rows.row(k).head(m);
    const Eigen::RowVectorXd coef = e.cwiseProduct(width.transpose());
    const double constant = e.dot(prob.box_lower) + prob.extra_rows(k, m);
    const double scale = row_scale(coef, constant);
    a.row(r).head(m) = -coef / scale;
    b(r) = constant / scale;
  }
  for (Eigen::Index j = 0; j < m; ++j, ++r) {
    a(r, j) = 1.0;
    b(r) = 1.0;
  }
  Vector c = Vector::Zero(n);
  c(m) = 1.0;
  c(m + 1) = -1.0;

  MaxMinLpSolution sol;
  Tableau tableau(a, b, c, tol);
  Vector y;
  switch (tableau.solve(y)) {
    case Tableau::Outcome::Infeasible:
      sol.status = LpStatus::InfeasiblePolytope;
      sol.p_opt = prob.box_lower;
      sol.value = -std::numeric_limits<double>::infinity();
      return sol;
    case Tableau::Outcome::Unbounded:
      throw NumericalError("max-min LP reported unbounded; objective rows should bound t");
    case Tableau::Outcome::Optimal:
      break;
  }

  const Vector s = y.head(m).cwiseMax(0.0).cwiseMin(1.0);
  sol.p_opt = (prob.box_lower + width.cwiseProduct(s)).cwiseMax(prob.box_lower).cwiseMin(prob.box_upper);
  sol.value = (prob.objective_rows.leftCols(m) * sol.p_opt + prob.objective_rows.col(m)).minCoeff();
  sol.status = LpStatus::Optimal;
  return sol;
}

}  // namespace mapel
