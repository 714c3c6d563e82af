#ifndef RANDBF_ORACLE_HPP
#define RANDBF_ORACLE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "randbf/graph.hpp"

namespace randbf::oracle {

inline constexpr std::size_t kDefaultCap = 256;

/// Reference results, computed without any of the engines.
struct OracleResult {
  std::size_t n = 0;
  Vertex source = 0;
  /// Row-major n x n; kUnreached where no path exists.
  std::vector<Weight> dist;
  /// Some vertex reachable from the source lies on a negative cycle.
  bool has_reachable_negative_cycle = false;
  /// Edges (u, v, w) with dist(s,u) + w == dist(s,v). Only meaningful when
  /// has_reachable_negative_cycle is false.
  std::vector<Edge> sp_edges;

  Weight distance(Vertex u, Vertex v) const { return dist[u * n + v]; }
  std::vector<Weight> distances_from_source() const;
};

/// All-pairs Floyd-Warshall. Throws std::invalid_argument above `cap`
/// vertices.
OracleResult floyd_warshall(const Graph& g, std::size_t cap = kDefaultCap);

/// Length of the shortest simple path from the source to each vertex, by
/// exhaustive enumeration; kUnreached where none exists. Throws
/// std::invalid_argument for n > 8.
std::vector<Weight> shortest_simple_path_lengths(const Graph& g);

}  // namespace randbf::oracle

#endif  // RANDBF_ORACLE_HPP
