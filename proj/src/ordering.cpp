#include "randbf/ordering.hpp"

#include <stdexcept>
#include <utility>

#include "randbf/rng.hpp"

namespace randbf {

Ordering Ordering::identity(std::size_t vertex_count, Vertex source) {
  if (source >= vertex_count) {
    throw std::invalid_argument("source outside the vertex range");
  }
  std::vector<Vertex> sequence;
  sequence.reserve(vertex_count);
  sequence.push_back(source);
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (v != source) sequence.push_back(v);
  }
  return from_sequence(sequence, source);
}

Ordering Ordering::from_ranks(std::vector<Vertex> ranks, Vertex source) {
  const std::size_t n = ranks.size();
  if (source >= n) {
    throw std::invalid_argument("source outside the vertex range");
  }
  std::vector<Vertex> sequence(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = ranks[v];
    if (r >= n || sequence[r] != kNoVertex) {
      throw std::invalid_argument("ranks do not form a permutation");
    }
    sequence[r] = v;
  }
  if (ranks[source] != 0) {
    throw std::invalid_argument("the source must have rank 0");
  }
  return Ordering(std::move(ranks), std::move(sequence), source);
}

Ordering Ordering::from_sequence(std::span<const Vertex> sequence, Vertex source) {
  const std::size_t n = sequence.size();
  std::vector<Vertex> ranks(n, kNoVertex);
  for (std::size_t p = 0; p < n; ++p) {
    const Vertex v = sequence[p];
    if (v >= n || ranks[v] != kNoVertex) {
      throw std::invalid_argument("sequence is not a permutation");
    }
    ranks[v] = static_cast<Vertex>(p);
  }
  return from_ranks(std::move(ranks), source);
}

Ordering random_ordering(std::size_t vertex_count, Vertex source, std::uint64_t seed) {
  Ordering base = Ordering::identity(vertex_count, source);
  std::vector<Vertex> sequence(base.sequence().begin(), base.sequence().end());
  Rng rng(seed);
  // Position 0 holds the source and never moves.
  for (std::size_t i = vertex_count - 1; i >= 2; --i) {
    const std::size_t j = 1 + rng.below(i);
    std::swap(sequence[i], sequence[j]);
  }
  return Ordering::from_sequence(sequence, source);
}

Ordering random_ordering(const Graph& g, std::uint64_t seed) {
  return random_ordering(g.vertex_count(), g.source(), seed);
}

}  // namespace randbf
