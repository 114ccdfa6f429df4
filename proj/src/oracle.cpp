#include "mapel/oracle.hpp"

#include <string>
#include <vector>

namespace mapel {

GridResult grid_search(const Network& net, int resolution) {
  const int m = net.size();
  if (m > kGridMaxLinks) {
    throw InvalidInput("grid search refuses " + std::to_string(m) + " links; at most " +
                       std::to_string(kGridMaxLinks) + " are supported");
  }
  if (resolution < 2) throw InvalidInput("grid resolution must be at least 2");

  const Vector floor = net.rate_floor();
  const double steps = static_cast<double>(resolution - 1);
  std::vector<int> idx(m, 0);
  Vector p = Vector::Zero(m);

  GridResult best;
  bool found = false;
  // Odometer with the last coordinate fastest, i.e. lexicographic order, so
  // keeping only strict improvements yields the smallest p among ties.
  for (;;) {
    for (int i = 0; i < m; ++i) p(i) = net.p_max()(i) * (static_cast<double>(idx[i]) / steps);
    ++best.points_evaluated;

    const Vector ratios = fraction_fg(net, p);
    bool meets = true;
    for (int i = 0; i < m && meets; ++i) meets = ratios(i) >= floor(i) * (1.0 - 1e-12);
    if (meets) {
      const double value = weighted_throughput(net, p);
      if (!found || value > best.objective_bps_hz) {
        found = true;
        best.objective_bps_hz = value;
        best.p_best = p;
      }
    }

    int pos = m - 1;
    while (pos >= 0 && ++idx[pos] == resolution) idx[pos--] = 0;
    if (pos < 0) break;
  }

  if (!found) throw NumericalError("no grid point meets the rate floors");
  return best;
}

}  // namespace mapel
