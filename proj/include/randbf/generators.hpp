#ifndef RANDBF_GENERATORS_HPP
#define RANDBF_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "randbf/graph.hpp"
#include "randbf/ordering.hpp"

namespace randbf {

/// Path 0 -> 1 -> ... -> n-1, unit weights, source 0. Its unique
/// shortest-path tree is the path itself. Requires n >= 2.
Graph worst_case_path(std::size_t n);

/// Complete digraph on n vertices whose unique shortest-path tree is still
/// the path 0 -> 1 -> ... -> n-1 (unit weights). Every other edge u -> v
/// gets weight `off_path_weight`, which must exceed n - 1 so that it stays
/// off all shortest paths; unset means n.
Graph complete_worst_case(std::size_t n, std::optional<Weight> off_path_weight = std::nullopt);

/// Ranks for worst_case_path(n) that make consecutive path edges alternate
/// between G+ and G-: position 0 gets rank 0, odd positions take the
/// highest remaining ranks in descending order, even positions take
/// 1, 2, 3, ... ascending.
Ordering adversarial_ordering(std::size_t n);

enum class GeneratorKind {
  kPathWorstCase,
  kRandomSparse,
  kRandomDense,
  kPlantedCycle,
  kAlternatingAdversary,
};

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kRandomSparse;
  std::size_t n = 1;
  /// Edge count for sparse and planted-cycle graphs.
  std::size_t m = 0;
  /// Fraction of the n(n-1) ordered pairs used by dense graphs.
  double density = 1.0;
  std::int64_t weight_min = -3;
  std::int64_t weight_max = 7;
  std::uint64_t seed = 0;
  /// Start with a zero-weight spanning arborescence rooted at the source.
  bool ensure_reachable = false;
  /// Regenerate (with derived seeds) until the oracle finds no negative
  /// cycle reachable from the source.
  bool negative_cycle_free = false;
  /// Add p(u) - p(v) to every edge u -> v for random integer potentials p
  /// in [0, potential_spread]. Cycle weights and shortest-path trees are
  /// unchanged; the edge weights may turn negative.
  std::int64_t potential_spread = 0;
  std::size_t cycle_length = 3;
  std::int64_t cycle_weight = -1;

  /// Throws std::invalid_argument on inconsistent parameters.
  void validate() const;
  /// Stable one-line description, e.g. "random-sparse:n=12:m=30:w=-3..7:seed=5".
  std::string describe() const;
};

/// Simple digraph (no self-loops, no parallel edges) built from `spec`,
/// deterministic in spec.seed.
///
/// Planted-cycle graphs are always source-reachable and contain a directed
/// cycle of `cycle_length` distinct vertices whose weights sum to
/// `cycle_weight`; the remaining edges draw weights from the spec range.
/// Path kinds ignore m and weights.
Graph random_graph(const GeneratorSpec& spec);

/// random_graph for the random kinds; worst_case_path for the path kinds.
Graph generate(const GeneratorSpec& spec);

}  // namespace randbf

#endif  // RANDBF_GENERATORS_HPP
