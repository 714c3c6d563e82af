#ifndef RANDBF_PARTITION_HPP
#define RANDBF_PARTITION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "randbf/graph.hpp"
#include "randbf/ordering.hpp"

namespace randbf {

/// Split of a graph's edges induced by an ordering.
///
/// `plus` holds edges rising in rank, sorted by ascending rank of the tail;
/// `minus` holds edges falling in rank, sorted by descending rank of the
/// tail; `loops` holds self-loops, sorted by ascending rank. Ties keep input
/// order. A front-to-back sweep of `plus` (resp. `minus`) therefore visits
/// tails in topological order of G+ (resp. G-).
class EdgePartition {
 public:
  std::span<const Edge> plus() const { return plus_; }
  std::span<const Edge> minus() const { return minus_; }
  std::span<const Edge> loops() const { return loops_; }

  /// Edges of each bucket leaving `u`.
  std::span<const Edge> plus_out(Vertex u) const;
  std::span<const Edge> minus_out(Vertex u) const;
  std::span<const Edge> loops_out(Vertex u) const;

  std::size_t vertex_count() const { return ranks_.size(); }

 private:
  friend EdgePartition partition_edges(const Graph& g, const Ordering& ord);

  std::vector<Vertex> ranks_;
  std::vector<Edge> plus_;
  std::vector<Edge> minus_;
  std::vector<Edge> loops_;
  // Bucket offsets indexed by rank (plus, loops) or by n - 1 - rank (minus).
  std::vector<std::size_t> plus_offsets_;
  std::vector<std::size_t> minus_offsets_;
  std::vector<std::size_t> loop_offsets_;
};

/// Throws std::invalid_argument if the ordering does not cover the graph's
/// vertices or does not start at the graph's source.
EdgePartition partition_edges(const Graph& g, const Ordering& ord);

}  // namespace randbf

#endif  // RANDBF_PARTITION_HPP
