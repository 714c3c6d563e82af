#include "randbf/engines.hpp"

#include <algorithm>
#include <cassert>

#include "randbf/partition.hpp"

namespace randbf {

SsspState::SsspState(std::size_t vertex_count, Vertex source)
    : dist(vertex_count, kUnreached),
      parent(vertex_count, kNoVertex),
      in_frontier(vertex_count, 0),
      changed(vertex_count, 0) {
  dist[source] = 0.0;
  frontier.push_back(source);
  in_frontier[source] = 1;
}

bool relax(SsspState& state, RunStats& stats, Vertex u, Vertex v, Weight w) {
  assert(state.reached(u));
  ++stats.relax_calls;
  const Weight candidate = state.dist[u] + w;
  if (state.reached(v) && !(state.dist[v] > candidate)) {
    return false;
  }
  state.dist[v] = candidate;
  state.parent[v] = u;
  if (!state.changed[v]) {
    state.changed[v] = 1;
    state.changed_list.push_back(v);
  }
  ++stats.improvements;
  return true;
}

namespace {

void begin_iteration(SsspState& state) {
  for (Vertex v : state.changed_list) state.changed[v] = 0;
  state.changed_list.clear();
}

// Replaces C with the vertices improved during the iteration just finished.
void rebuild_frontier(SsspState& state) {
  for (Vertex v : state.frontier) state.in_frontier[v] = 0;
  state.frontier = state.changed_list;
  for (Vertex v : state.frontier) state.in_frontier[v] = 1;
}

std::uint64_t iteration_cap(const Graph& g, const EngineOptions& options) {
  return options.max_iterations.value_or(g.vertex_count() + 1);
}

// Shared outer loop. `body` performs one iteration's relaxations.
template <typename Body>
void drive(const Graph& g, const EngineOptions& options, SsspState& state,
           RunStats& stats, Body&& body) {
  const std::uint64_t cap = iteration_cap(g, options);
  while (!state.frontier.empty()) {
    if (stats.iterations >= cap) {
      stats.iteration_cap_hit = true;
      return;
    }
    ++stats.iterations;
    begin_iteration(state);
    body();
    rebuild_frontier(state);
    if (options.after_iteration &&
        options.after_iteration(state, stats) == IterationControl::kStop) {
      return;
    }
  }
  stats.terminated_early = true;
}

}  // namespace

SsspResult run_basic(const Graph& g, const BasicOptions& options) {
  const std::size_t n = g.vertex_count();
  SsspResult r{SsspState(n, g.source()), {}};
  auto& [state, stats] = r;
  for (std::size_t pass = 1; pass < n; ++pass) {
    ++stats.iterations;
    begin_iteration(state);
    for (const Edge& e : g.edges()) {
      if (state.reached(e.tail)) {
        relax(state, stats, e.tail, e.head, e.weight);
      } else if (options.strict_count) {
        ++stats.relax_calls;
      }
    }
    rebuild_frontier(state);
    if (options.after_pass) options.after_pass(state, stats);
  }
  return r;
}

SsspResult run_adaptive(const Graph& g, const EngineOptions& options) {
  SsspResult r{SsspState(g.vertex_count(), g.source()), {}};
  auto& [state, stats] = r;
  drive(g, options, state, stats, [&] {
    for (Vertex u : state.frontier) {
      for (const Edge& e : g.out_edges(u)) {
        relax(state, stats, u, e.head, e.weight);
      }
    }
  });
  return r;
}

SsspResult run_yen(const Graph& g, const Ordering& ord, const EngineOptions& options) {
  const EdgePartition part = partition_edges(g, ord);
  const std::size_t n = g.vertex_count();
  SsspResult r{SsspState(n, g.source()), {}};
  auto& [state, stats] = r;
  const auto active = [&](Vertex u) { return state.in_frontier[u] || state.changed[u]; };
  drive(g, options, state, stats, [&] {
    for (std::size_t pos = 0; pos < n; ++pos) {
      const Vertex u = ord.vertex_at(pos);
      if (!active(u)) continue;
      for (const Edge& e : part.loops_out(u)) relax(state, stats, u, e.head, e.weight);
      for (const Edge& e : part.plus_out(u)) relax(state, stats, u, e.head, e.weight);
    }
    for (std::size_t pos = n; pos-- > 0;) {
      const Vertex u = ord.vertex_at(pos);
      if (!active(u)) continue;
      for (const Edge& e : part.minus_out(u)) relax(state, stats, u, e.head, e.weight);
    }
  });
  return r;
}

RandomizedResult run_randomized(const Graph& g, std::uint64_t seed,
                                const EngineOptions& options) {
  Ordering ord = random_ordering(g, seed);
  SsspResult r = run_yen(g, ord, options);
  return {std::move(r.state), r.stats, std::move(ord)};
}

std::vector<Vertex> predecessor_path(const SsspState& state, Vertex source, Vertex v) {
  if (!state.reached(v)) return {};
  std::vector<Vertex> path{v};
  const std::size_t n = state.dist.size();
  while (v != source) {
    v = state.parent[v];
    if (v == kNoVertex || path.size() > n) return {};
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace randbf
