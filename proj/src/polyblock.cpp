#include "mapel/polyblock.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <limits>

namespace mapel {
namespace {

bool dominates_raw(const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

// Same accumulation order as log2_phi(), so ties resolve identically.
double weighted_log2(const Vector& w, const double* x) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) total += w(i) * std::log2(x[i]);
  return total;
}

void check_projection(const Vector& v, const Vector& proj) {
  if (proj.size() != v.size()) throw InvalidInput("projection has the wrong length");
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (!(proj(j) <= v(j))) throw InvalidInput("projection must not exceed the vertex");
  }
}

std::vector<Vector> children_of(const Vector& v, const Vector& proj) {
  std::vector<Vector> out;
  out.reserve(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    Vector child = v;
    child(j) = proj(j);
    out.push_back(std::move(child));
  }
  return out;
}

}  // namespace

bool dominates(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("dominates: length mismatch");
  return dominates_raw(a.data(), b.data(), static_cast<std::size_t>(a.size()));
}

bool VertexSet::is_proper() const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (i != j && dominates(vertices_[j], vertices_[i])) return false;
    }
  }
  return true;
}

bool VertexSet::covers(const Vector& x) const {
  for (const auto& v : vertices_) {
    if (dominates(v, x)) return true;
  }
  return false;
}

Vector initial_vertex(const Network& net) {
  Vector b(net.size());
  for (int i = 0; i < net.size(); ++i) {
    b(i) = 1.0 + net.gain(i, i) * net.p_max()(i) / net.noise()(i);
  }
  return b;
}

VertexSet prune_improper(const VertexSet& vs) {
  const auto& v = vs.vertices();
  std::vector<Vector> kept;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < v.size() && !drop; ++j) {
      if (j == i || !dominates(v[j], v[i])) continue;
      // A strictly larger vertex always wins; among equal copies the first stays.
      drop = v[j] != v[i] || j < i;
    }
    if (!drop) kept.push_back(v[i]);
  }
  return VertexSet(std::move(kept));
}

VertexSet replace_vertex(const VertexSet& vs, const Vector& v, const Vector& proj) {
  check_projection(v, proj);
  std::vector<Vector> next;
  bool found = false;
  for (const auto& u : vs.vertices()) {
    if (!found && u.size() == v.size() && u == v) {
      found = true;
      continue;
    }
    next.push_back(u);
  }
  if (!found) throw InvalidInput("replace_vertex: vertex is not in the set");
  for (auto& child : children_of(v, proj)) next.push_back(std::move(child));
  return prune_improper(VertexSet(std::move(next)));
}

std::optional<Vector> select_best(const VertexSet& vs, const Network& net) {
  const Vector floor = net.rate_floor();
  std::optional<Vector> best;
  double best_value = 0.0;
  for (const auto& v : vs.vertices()) {
    if (!dominates(v, floor)) continue;
    const double value = log2_phi(net, v);
    if (!best || value > best_value) {
      best = v;
      best_value = value;
    }
  }
  return best;
}

Polyblock::Polyblock(const Network& net, const Vector& initial)
    : dim_(static_cast<std::size_t>(net.size())), weights_(net.weights()), floor_(net.rate_floor()) {
  if (initial.size() != net.size()) throw InvalidInput("initial vertex has the wrong length");
  insert(initial.data());
}

std::optional<Vector> Polyblock::best() const {
  if (order_.empty()) return std::nullopt;
  const double* x = coords(order_.begin()->slot);
  return Vector(Eigen::Map<const Vector>(x, static_cast<Eigen::Index>(dim_)));
}

double Polyblock::best_log2_phi() const {
  if (order_.empty()) throw InvalidInput("polyblock is empty");
  return order_.begin()->log2_phi;
}

void Polyblock::drop_dominated_children(const double* z, const double* proj, double floor_value,
                                        std::vector<char>& keep) const {
  // Child j equals z except at coordinate j. A survivor v that dominates it
  // sits below z in coordinate j alone, so one pass settles every child, and
  // phi is monotone so nothing valued under the weakest child can matter.
  const std::size_t slots = log2_phi_.size();
  for (std::size_t s = 0; s < slots; ++s) {
    if (!alive_flag_[s] || log2_phi_[s] < floor_value) continue;
    const double* v = coords(s);
    std::size_t below = dim_;
    bool two = false;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i] < z[i]) {
        if (below != dim_) {
          two = true;
          break;
        }
        below = i;
      }
    }
    if (two) continue;
    if (below == dim_) {
      std::fill(keep.begin(), keep.end(), 0);
      return;
    }
    if (v[below] >= proj[below]) keep[below] = 0;
  }
}

void Polyblock::insert(const double* x) {
  if (!dominates_raw(x, floor_.data(), dim_)) return;
  const std::size_t slot = log2_phi_.size();
  coords_.insert(coords_.end(), x, x + dim_);
  const double value = weighted_log2(weights_, x);
  log2_phi_.push_back(value);
  seq_.push_back(next_seq_++);
  alive_flag_.push_back(1);
  order_.insert({value, seq_.back(), slot});
  ++alive_;
}

void Polyblock::refine(const Vector& proj) {
  if (order_.empty()) throw InvalidInput("refine on an empty polyblock");
  const std::size_t slot = order_.begin()->slot;
  const Vector z = Eigen::Map<const Vector>(coords(slot), static_cast<Eigen::Index>(dim_));
  check_projection(z, proj);
  order_.erase(order_.begin());
  alive_flag_[slot] = 0;
  --alive_;

  // Children lie below z, and z was not dominated by any survivor, so no
  // survivor can be dominated by a child: only the children need filtering.
  const auto children = children_of(z, proj);
  double weakest = std::numeric_limits<double>::infinity();
  for (const auto& child : children) weakest = std::min(weakest, weighted_log2(weights_, child.data()));
  std::vector<char> keep(children.size(), 1);
  drop_dominated_children(z.data(), proj.data(), weakest, keep);
  for (std::size_t a = 0; a < children.size(); ++a) {
    if (!keep[a]) continue;
    if (!dominates(children[a], floor_)) {
      keep[a] = 0;
      continue;
    }
    for (std::size_t b = 0; b < children.size() && keep[a]; ++b) {
      if (b == a || !keep[b] || !dominates(children[b], children[a])) continue;
      if (children[b] != children[a] || b < a) keep[a] = 0;
    }
  }
  for (std::size_t a = 0; a < children.size(); ++a) {
    if (keep[a]) insert(children[a].data());
  }

  if (log2_phi_.size() > 2 * alive_ + 1024) compact();
}

void Polyblock::compact() {
  std::vector<double> coords;
  std::vector<double> values;
  std::vector<std::uint64_t> seqs;
  coords.reserve(alive_ * dim_);
  values.reserve(alive_);
  seqs.reserve(alive_);
  for (std::size_t s = 0; s < log2_phi_.size(); ++s) {
    if (!alive_flag_[s]) continue;
    coords.insert(coords.end(), coords_.begin() + s * dim_, coords_.begin() + (s + 1) * dim_);
    values.push_back(log2_phi_[s]);
    seqs.push_back(seq_[s]);
  }
  coords_ = std::move(coords);
  log2_phi_ = std::move(values);
  seq_ = std::move(seqs);
  alive_flag_.assign(log2_phi_.size(), 1);
  order_.clear();
  for (std::size_t s = 0; s < log2_phi_.size(); ++s) order_.insert({log2_phi_[s], seq_[s], s});
}

VertexSet Polyblock::vertex_set() const {
  std::vector<Vector> out;
  out.reserve(alive_);
  for (std::size_t s = 0; s < log2_phi_.size(); ++s) {
    if (alive_flag_[s]) {
      out.emplace_back(Eigen::Map<const Vector>(coords(s), static_cast<Eigen::Index>(dim_)));
    }
  }
  return VertexSet(std::move(out));
}

}  // namespace mapel
