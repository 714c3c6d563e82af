#include "randbf/partition.hpp"

#include <stdexcept>

namespace randbf {
namespace {

// Counting sort of `edges` into `out` by key(edge) in [0, n), stable.
template <typename Key>
void bucket_by(const std::vector<Edge>& edges, std::size_t n, Key key,
               std::vector<Edge>& out, std::vector<std::size_t>& offsets) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[key(e) + 1];
  for (std::size_t k = 0; k < n; ++k) offsets[k + 1] += offsets[k];
  out.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) out[cursor[key(e)]++] = e;
}

std::span<const Edge> slice(const std::vector<Edge>& edges,
                            const std::vector<std::size_t>& offsets, std::size_t k) {
  return std::span<const Edge>(edges).subspan(offsets[k], offsets[k + 1] - offsets[k]);
}

}  // namespace

std::span<const Edge> EdgePartition::plus_out(Vertex u) const {
  return slice(plus_, plus_offsets_, ranks_[u]);
}

std::span<const Edge> EdgePartition::minus_out(Vertex u) const {
  return slice(minus_, minus_offsets_, ranks_.size() - 1 - ranks_[u]);
}

std::span<const Edge> EdgePartition::loops_out(Vertex u) const {
  return slice(loops_, loop_offsets_, ranks_[u]);
}

EdgePartition partition_edges(const Graph& g, const Ordering& ord) {
  const std::size_t n = g.vertex_count();
  if (ord.size() != n || ord.source() != g.source()) {
    throw std::invalid_argument("ordering does not match the graph");
  }
  std::vector<Edge> up, down, self;
  for (const Edge& e : g.edges()) {
    const Vertex ru = ord.rank(e.tail);
    const Vertex rv = ord.rank(e.head);
    if (ru < rv) {
      up.push_back(e);
    } else if (ru > rv) {
      down.push_back(e);
    } else {
      self.push_back(e);
    }
  }
  EdgePartition p;
  p.ranks_.assign(ord.ranks().begin(), ord.ranks().end());
  const auto rank_of_tail = [&](const Edge& e) -> std::size_t { return ord.rank(e.tail); };
  bucket_by(up, n, rank_of_tail, p.plus_, p.plus_offsets_);
  bucket_by(down, n, [&](const Edge& e) -> std::size_t { return n - 1 - ord.rank(e.tail); },
            p.minus_, p.minus_offsets_);
  bucket_by(self, n, rank_of_tail, p.loops_, p.loop_offsets_);
  return p;
}

}  // namespace randbf
