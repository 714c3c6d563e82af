#ifndef RANDBF_ENGINES_HPP
#define RANDBF_ENGINES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "randbf/graph.hpp"
#include "randbf/ordering.hpp"

namespace randbf {

/// Working state of a label-correcting run.
///
/// `dist[v]` is kUnreached until the first relaxation into v; `parent[v]` is
/// kNoVertex exactly when v has never been improved. `frontier` is the set C
/// of vertices whose distance changed in the previous outer iteration.
/// `changed` / `changed_list` record the vertices improved during the
/// current iteration; they are reset at the start of every iteration.
struct SsspState {
  std::vector<Weight> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> frontier;
  std::vector<char> in_frontier;
  std::vector<char> changed;
  std::vector<Vertex> changed_list;

  SsspState() = default;
  SsspState(std::size_t vertex_count, Vertex source);

  bool reached(Vertex v) const { return dist[v] != kUnreached; }
};

struct RunStats {
  std::uint64_t relax_calls = 0;
  std::uint64_t improvements = 0;
  std::uint64_t iterations = 0;
  /// The loop stopped because an iteration produced no change.
  bool terminated_early = false;
  /// The engine's iteration cap stopped the loop; with a default cap this
  /// means a reachable negative cycle slipped past the caller.
  bool iteration_cap_hit = false;
  /// Set only by cycle-detecting runs.
  std::optional<std::vector<Vertex>> negative_cycle;
};

struct SsspResult {
  SsspState state;
  RunStats stats;
};

struct RandomizedResult {
  SsspState state;
  RunStats stats;
  Ordering ordering;
};

enum class IterationControl { kContinue, kStop };

/// Knobs shared by the adaptive, Yen and randomized engines.
struct EngineOptions {
  /// Outer-iteration cap; unset means n + 1.
  std::optional<std::uint64_t> max_iterations;
  /// Called after every completed outer iteration (frontier already rebuilt).
  std::function<IterationControl(const SsspState&, const RunStats&)> after_iteration;
};

/// Relaxes edge u -> v of weight w. `u` must be reached.
/// Returns true iff dist[v] strictly decreased.
bool relax(SsspState& state, RunStats& stats, Vertex u, Vertex v, Weight w);

struct BasicOptions {
  /// Count relaxations out of unreached tails too (without touching any
  /// distance), so relax_calls is exactly m(n - 1).
  bool strict_count = false;
  std::function<void(const SsspState&, const RunStats&)> after_pass;
};

/// n - 1 passes over every edge in input order.
SsspResult run_basic(const Graph& g, const BasicOptions& options = {});

/// Relaxes only the out-edges of vertices that changed in the previous pass;
/// stops when nothing changes.
SsspResult run_adaptive(const Graph& g, const EngineOptions& options = {});

/// Two-DAG variant: each iteration sweeps G+ in ascending rank, then G- in
/// descending rank. A vertex's edges are scanned iff it is in the frontier
/// or improved earlier in the same iteration. Self-loops of a scanned vertex
/// are relaxed at the start of its G+ visit.
SsspResult run_yen(const Graph& g, const Ordering& ord, const EngineOptions& options = {});

/// run_yen over random_ordering(g, seed).
RandomizedResult run_randomized(const Graph& g, std::uint64_t seed,
                                const EngineOptions& options = {});

/// Vertices from `v` back to the source following parent pointers, source
/// first. Empty if v is unreached or the walk does not reach the source
/// within n steps.
std::vector<Vertex> predecessor_path(const SsspState& state, Vertex source, Vertex v);

}  // namespace randbf

#endif  // RANDBF_ENGINES_HPP
