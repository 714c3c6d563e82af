#ifndef RANDBF_NEGCYCLE_HPP
#define RANDBF_NEGCYCLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "randbf/engines.hpp"
#include "randbf/graph.hpp"
#include "randbf/ordering.hpp"

namespace randbf {

/// Finds a cycle in the functional graph v -> parent[v] (kNoVertex = no
/// edge). Linear time, three-color marking. The cycle is returned in
/// parent-pointer order starting from the first cycle vertex the walk hit,
/// scanning start vertices by index.
std::optional<std::vector<Vertex>> detect_cycle_in_parent_graph(std::span<const Vertex> parent);

/// ceil(n/3 + 2 + sqrt(2 c n ln n)): iteration after which a reachable
/// negative cycle shows up in the parent graph with probability at least
/// 1 - 1/n^(c-1). Throws std::invalid_argument for n < 2 or c <= 0.
std::uint64_t iteration_threshold(std::size_t n, double c);

/// ceil((n-1)/2) + 1. Any ordering settles every simple-path distance
/// within ceil((n-1)/2) iterations, so a reachable negative cycle is
/// visible in the parent graph after this iteration.
std::uint64_t yen_detection_bound(std::size_t n);

/// ceil(n/2) + 2: hard iteration cap for detecting runs.
std::uint64_t detection_iteration_cap(std::size_t n);

struct CycleVerdict {
  bool found = false;
  /// Cycle in graph-edge order: cycle[i] -> cycle[(i+1) % k]. Empty when
  /// there is no certificate.
  std::vector<Vertex> cycle;
  /// The edge chosen for each consecutive pair (minimum-weight parallel edge).
  std::vector<Edge> cycle_edges;
  Weight cycle_weight = 0.0;
  std::uint64_t iterations_used = 0;
  std::uint64_t relax_calls_used = 0;
};

/// A parent-graph cycle whose mapped graph cycle is not negative. Signals a
/// bug, never an input problem.
class DetectionDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DetectionOptions {
  double c = 2.0;
  /// Check the parent graph after every iteration, not just from the
  /// threshold on.
  bool check_every_iteration = false;
};

struct DetectionResult {
  SsspState state;
  RunStats stats;
  CycleVerdict verdict;
  Ordering ordering;
  /// First iteration whose end triggers a parent-graph check.
  std::uint64_t first_check_iteration = 0;
  /// iteration_threshold(n, c) exceeds n/2 + 2, so checks start at
  /// yen_detection_bound(n) instead.
  bool threshold_fallback = false;
};

/// Maps a parent-pointer cycle to graph edges and sums them. Throws
/// DetectionDefect if a pair has no edge or the sum is not negative.
CycleVerdict certify_parent_cycle(const Graph& g, std::span<const Vertex> parent_cycle);

/// Randomized engine with subtree-traversal cycle detection. Only negative
/// cycles reachable from the source are detected.
DetectionResult run_with_detection(const Graph& g, std::uint64_t seed,
                                   const DetectionOptions& options = {});
DetectionResult run_with_detection(const Graph& g, const Ordering& ord,
                                   const DetectionOptions& options = {});

/// n^3/6 + sqrt(2) n^(5/2) sqrt(c ln n).
double dense_relaxation_budget(std::size_t n, double c);

struct MonteCarloResult {
  /// `found` without a certificate: the budget ran out before termination.
  CycleVerdict verdict;
  SsspState state;
  RunStats stats;
  double budget = 0.0;
};

/// Runs the randomized engine under dense_relaxation_budget(n, c). A
/// "none" verdict is always correct; a "cycle" verdict is wrong with
/// probability at most 1/n^(c-1).
MonteCarloResult monte_carlo_dense_detect(const Graph& g, std::uint64_t seed, double c = 2.0);

}  // namespace randbf

#endif  // RANDBF_NEGCYCLE_HPP
