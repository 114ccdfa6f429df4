#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mapel/common.hpp"
#include "mapel/network.hpp"

namespace mapel {

/// True when a >= b componentwise. Exact comparison, no epsilon.
bool dominates(const Vector& a, const Vector& b);

/// Vertex set of a polyblock (the union of boxes [0, v]), kept in insertion
/// order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vector> vertices) : vertices_(std::move(vertices)) {}

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const Vector& operator[](std::size_t i) const { return vertices_[i]; }

  /// No vertex is dominated by a different vertex and there are no duplicates.
  bool is_proper() const;

  /// Some vertex dominates x, i.e. x lies in the polyblock.
  bool covers(const Vector& x) const;

 private:
  std::vector<Vector> vertices_;
};

/// b_i = 1 + G_ii p_max_i / n_i, the corner of a box containing the whole
/// feasible f/g region.
Vector initial_vertex(const Network& net);

/// Drops dominated vertices and duplicates, keeping first occurrences in order.
VertexSet prune_improper(const VertexSet& vs);

/// Replaces v by its M children (v with coordinate j lowered to proj_j) and
/// prunes. Throws InvalidInput if v is absent or proj exceeds v anywhere.
VertexSet replace_vertex(const VertexSet& vs, const Vector& v, const Vector& proj);

/// Vertex of largest phi among those in the rate-floor region; ties go to the
/// earliest vertex. Empty when no vertex clears the floors.
std::optional<Vector> select_best(const VertexSet& vs, const Network& net);

/// The working polyblock of the outer loop.
///
/// Keeps only proper vertices inside the rate-floor region, ordered by log2 phi
/// so the best vertex is at the front. Ties are broken by insertion order,
/// matching select_best. New children can never dominate a surviving vertex,
/// so refinement only has to filter the children, and only against vertices
/// whose value is at least the child's.
class Polyblock {
 public:
  Polyblock(const Network& net, const Vector& initial);

  std::size_t size() const { return alive_; }
  bool empty() const { return alive_ == 0; }

  /// Current best vertex, or empty if none remains.
  std::optional<Vector> best() const;
  /// log2 phi of best(). Requires a nonempty polyblock.
  double best_log2_phi() const;

  /// Replaces the current best vertex by its children with respect to proj.
  void refine(const Vector& proj);

  /// Surviving vertices in insertion order.
  VertexSet vertex_set() const;

 private:
  struct Key {
    double log2_phi;
    std::uint64_t seq;
    std::size_t slot;
    // Best first.
    bool operator<(const Key& o) const {
      if (log2_phi != o.log2_phi) return log2_phi > o.log2_phi;
      return seq < o.seq;
    }
  };

  const double* coords(std::size_t slot) const { return coords_.data() + slot * dim_; }
  void drop_dominated_children(const double* z, const double* proj, double floor_value,
                               std::vector<char>& keep) const;
  void insert(const double* x);
  void compact();

  std::size_t dim_;
  Vector weights_;
  Vector floor_;
  // Slot-major vertex storage in insertion order; dead slots are reclaimed by
  // compact().
  std::vector<double> coords_;
  std::vector<double> log2_phi_;
  std::vector<std::uint64_t> seq_;
  std::vector<char> alive_flag_;
  std::set<Key> order_;
  std::size_t alive_ = 0;
  std::uint64_t next_seq_ = 0;
};

}  // namespace mapel
