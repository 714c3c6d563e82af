#include "randbf/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace randbf::oracle {

std::vector<Weight> OracleResult::distances_from_source() const {
  return std::vector<Weight>(dist.begin() + static_cast<std::ptrdiff_t>(source * n),
                             dist.begin() + static_cast<std::ptrdiff_t>((source + 1) * n));
}

OracleResult floyd_warshall(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap) {
    throw std::invalid_argument("oracle: graph exceeds the vertex cap");
  }
  OracleResult r;
  r.n = n;
  r.source = g.source();
  r.dist.assign(n * n, kUnreached);
  auto at = [&](std::size_t u, std::size_t v) -> Weight& { return r.dist[u * n + v]; };
  for (std::size_t v = 0; v < n; ++v) at(v, v) = 0.0;
  for (const Edge& e : g.edges()) {
    at(e.tail, e.head) = std::min(at(e.tail, e.head), e.weight);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (at(i, k) == kUnreached) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (at(k, j) == kUnreached) continue;
        at(i, j) = std::min(at(i, j), at(i, k) + at(k, j));
      }
    }
  }
  const Vertex s = g.source();
  for (std::size_t u = 0; u < n; ++u) {
    if (at(s, u) != kUnreached && at(u, u) < 0.0) r.has_reachable_negative_cycle = true;
  }
  for (const Edge& e : g.edges()) {
    const Weight du = at(s, e.tail);
    const Weight dv = at(s, e.head);
    if (du != kUnreached && dv != kUnreached && du + e.weight == dv) r.sp_edges.push_back(e);
  }
  return r;
}

std::vector<Weight> shortest_simple_path_lengths(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("oracle: simple-path enumeration is limited to n <= 8");
  std::vector<Weight> best(n, kUnreached);
  std::vector<char> on_path(n, 0);
  std::function<void(Vertex, Weight)> extend = [&](Vertex u, Weight length) {
    best[u] = std::min(best[u], length);
    on_path[u] = 1;
    for (const Edge& e : g.out_edges(u)) {
      if (!on_path[e.head]) extend(e.head, length + e.weight);
    }
    on_path[u] = 0;
  };
  extend(g.source(), 0.0);
  return best;
}

}  // namespace randbf::oracle
