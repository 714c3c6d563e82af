#ifndef RANDBF_ORDERING_HPP
#define RANDBF_ORDERING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "randbf/graph.hpp"

namespace randbf {

/// A numbering of the vertices with the source first.
///
/// `rank(v)` is the position of v; `vertex_at(p)` is its inverse. The rank
/// vector is always a permutation of [0, n) and the source has rank 0.
class Ordering {
 public:
  /// Source first, then the remaining vertices by index.
  static Ordering identity(std::size_t vertex_count, Vertex source);

  /// Throws std::invalid_argument unless `ranks` is a permutation with
  /// ranks[source] == 0.
  static Ordering from_ranks(std::vector<Vertex> ranks, Vertex source);

  /// Builds the ordering that visits `sequence[0], sequence[1], ...`.
  static Ordering from_sequence(std::span<const Vertex> sequence, Vertex source);

  std::size_t size() const { return ranks_.size(); }
  Vertex source() const { return source_; }
  Vertex rank(Vertex v) const { return ranks_[v]; }
  Vertex vertex_at(std::size_t position) const { return sequence_[position]; }
  std::span<const Vertex> ranks() const { return ranks_; }
  std::span<const Vertex> sequence() const { return sequence_; }

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  Ordering(std::vector<Vertex> ranks, std::vector<Vertex> sequence, Vertex source)
      : ranks_(std::move(ranks)), sequence_(std::move(sequence)), source_(source) {}

  std::vector<Vertex> ranks_;
  std::vector<Vertex> sequence_;
  Vertex source_;
};

/// Uniformly random ordering with the source first.
///
/// Seeded Fisher-Yates over the non-source vertices (in index order),
/// drawing from randbf::Rng (mt19937_64 with rejection-sampled bounds), so
/// the result is a deterministic function of (n, source, seed) on every
/// platform.
Ordering random_ordering(std::size_t vertex_count, Vertex source, std::uint64_t seed);
Ordering random_ordering(const Graph& g, std::uint64_t seed);

}  // namespace randbf

#endif  // RANDBF_ORDERING_HPP
