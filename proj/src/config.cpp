#include "mapel/config.hpp"

#include "mapel/common.hpp"

namespace mapel {

void SolverConfig::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidInput("delta must lie in (0, 1)");
  if (!(proj_tol > 0.0)) throw InvalidInput("proj_tol must be positive");
  if (!(lp_tol > 0.0)) throw InvalidInput("lp_tol must be positive");
  if (proj_max_iter == 0) throw InvalidInput("proj_max_iter must be positive");
  if (max_outer_iter == 0) throw InvalidInput("max_outer_iter must be positive");
  if (max_vertices == 0) throw InvalidInput("max_vertices must be positive");
}

}  // namespace mapel
