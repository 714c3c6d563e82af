#include "randbf/negcycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace randbf {

std::optional<std::vector<Vertex>> detect_cycle_in_parent_graph(std::span<const Vertex> parent) {
  enum : char { kWhite, kGray, kBlack };
  const std::size_t n = parent.size();
  std::vector<char> color(n, kWhite);
  std::vector<Vertex> walk;
  for (Vertex start = 0; start < n; ++start) {
    if (color[start] != kWhite) continue;
    walk.clear();
    Vertex v = start;
    while (v != kNoVertex && color[v] == kWhite) {
      color[v] = kGray;
      walk.push_back(v);
      v = parent[v];
      if (v != kNoVertex && v >= n) {
        throw std::invalid_argument("parent pointer outside the vertex range");
      }
    }
    if (v != kNoVertex && color[v] == kGray) {
      const auto first = std::find(walk.begin(), walk.end(), v);
      return std::vector<Vertex>(first, walk.end());
    }
    for (Vertex w : walk) color[w] = kBlack;
  }
  return std::nullopt;
}

std::uint64_t iteration_threshold(std::size_t n, double c) {
  if (n < 2) throw std::invalid_argument("iteration_threshold needs n >= 2");
  if (!(c > 0.0)) throw std::invalid_argument("iteration_threshold needs c > 0");
  const double nn = static_cast<double>(n);
  return static_cast<std::uint64_t>(std::ceil(nn / 3.0 + 2.0 + std::sqrt(2.0 * c * nn * std::log(nn))));
}

std::uint64_t yen_detection_bound(std::size_t n) {
  return n / 2 + 1;  // ceil((n-1)/2) == floor(n/2)
}

std::uint64_t detection_iteration_cap(std::size_t n) { return (n + 1) / 2 + 2; }

CycleVerdict certify_parent_cycle(const Graph& g, std::span<const Vertex> parent_cycle) {
  CycleVerdict verdict;
  verdict.found = true;
  verdict.cycle.assign(parent_cycle.rbegin(), parent_cycle.rend());
  const std::size_t k = verdict.cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex tail = verdict.cycle[i];
    const Vertex head = verdict.cycle[(i + 1) % k];
    const Edge* best = nullptr;
    for (const Edge& e : g.out_edges(tail)) {
      if (e.head == head && (best == nullptr || e.weight < best->weight)) best = &e;
    }
    if (best == nullptr) {
      throw DetectionDefect("parent pointer " + std::to_string(head) + " -> " +
                            std::to_string(tail) + " has no matching graph edge");
    }
    verdict.cycle_edges.push_back(*best);
    verdict.cycle_weight += best->weight;
  }
  if (!(verdict.cycle_weight < 0.0)) {
    throw DetectionDefect("parent-graph cycle maps to a graph cycle of weight " +
                          std::to_string(verdict.cycle_weight));
  }
  return verdict;
}

DetectionResult run_with_detection(const Graph& g, std::uint64_t seed,
                                   const DetectionOptions& options) {
  return run_with_detection(g, random_ordering(g, seed), options);
}

DetectionResult run_with_detection(const Graph& g, const Ordering& ord,
                                   const DetectionOptions& options) {
  const std::size_t n = g.vertex_count();
  DetectionResult result{{}, {}, {}, ord, 0, false};
  if (n < 2) {
    result.first_check_iteration = 1;
  } else {
    const std::uint64_t threshold = iteration_threshold(n, options.c);
    result.first_check_iteration = threshold;
    if (static_cast<double>(threshold) > static_cast<double>(n) / 2.0 + 2.0) {
      result.threshold_fallback = true;
      result.first_check_iteration = yen_detection_bound(n);
    }
  }
  if (options.check_every_iteration) result.first_check_iteration = 1;

  std::optional<std::vector<Vertex>> parent_cycle;
  EngineOptions engine;
  engine.max_iterations = detection_iteration_cap(n);
  engine.after_iteration = [&](const SsspState& state, const RunStats& stats) {
    if (stats.iterations < result.first_check_iteration) return IterationControl::kContinue;
    parent_cycle = detect_cycle_in_parent_graph(state.parent);
    return parent_cycle ? IterationControl::kStop : IterationControl::kContinue;
  };
  SsspResult run = run_yen(g, ord, engine);
  result.state = std::move(run.state);
  result.stats = std::move(run.stats);

  if (parent_cycle) {
    result.verdict = certify_parent_cycle(g, *parent_cycle);
    result.stats.negative_cycle = result.verdict.cycle;
  } else if (result.stats.iteration_cap_hit) {
    throw DetectionDefect("iteration cap reached without a parent-graph cycle");
  }
  result.verdict.iterations_used = result.stats.iterations;
  result.verdict.relax_calls_used = result.stats.relax_calls;
  return result;
}

double dense_relaxation_budget(std::size_t n, double c) {
  if (n < 1) throw std::invalid_argument("dense_relaxation_budget needs n >= 1");
  if (!(c > 0.0)) throw std::invalid_argument("dense_relaxation_budget needs c > 0");
  const double nn = static_cast<double>(n);
  return nn * nn * nn / 6.0 + std::sqrt(2.0) * std::pow(nn, 2.5) * std::sqrt(c * std::log(nn));
}

MonteCarloResult monte_carlo_dense_detect(const Graph& g, std::uint64_t seed, double c) {
  MonteCarloResult result;
  result.budget = dense_relaxation_budget(g.vertex_count(), c);
  bool exhausted = false;
  EngineOptions engine;
  engine.max_iterations = std::numeric_limits<std::uint64_t>::max();
  engine.after_iteration = [&](const SsspState& state, const RunStats& stats) {
    if (!state.frontier.empty() && static_cast<double>(stats.relax_calls) > result.budget) {
      exhausted = true;
      return IterationControl::kStop;
    }
    return IterationControl::kContinue;
  };
  RandomizedResult run = run_randomized(g, seed, engine);
  result.state = std::move(run.state);
  result.stats = std::move(run.stats);
  result.verdict.found = exhausted;
  result.verdict.iterations_used = result.stats.iterations;
  result.verdict.relax_calls_used = result.stats.relax_calls;
  return result;
}

}  // namespace randbf
