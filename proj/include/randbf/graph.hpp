#ifndef RANDBF_GRAPH_HPP
#define RANDBF_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace randbf {

using Vertex = std::uint32_t;
using Weight = double;

/// Sentinel for "no vertex" (absent predecessor, absent parent pointer).
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Tentative distance of a vertex that no relaxation has reached yet.
inline constexpr Weight kUnreached = std::numeric_limits<Weight>::infinity();

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  Weight weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed weighted multigraph with a designated source vertex.
///
/// Parallel edges and self-loops are allowed. Weights must be finite.
/// Construction validates every edge and throws std::invalid_argument on
/// out-of-range endpoints, non-finite weights, or an invalid source.
/// Immutable afterwards; out-edges are kept in a CSR copy grouped by tail,
/// preserving input order within each tail.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges, Vertex source = 0);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  Vertex source() const { return source_; }

  /// Edges in input order.
  std::span<const Edge> edges() const { return edges_; }

  /// Out-edges of `u` in input order.
  std::span<const Edge> out_edges(Vertex u) const;

  /// Same edges, different source.
  Graph with_source(Vertex source) const;

 private:
  std::size_t vertex_count_;
  Vertex source_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Edge> out_edges_;
};

}  // namespace randbf

#endif  // RANDBF_GRAPH_HPP
