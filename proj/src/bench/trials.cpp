#include "randbf/bench/trials.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "randbf/engines.hpp"
#include "randbf/generators.hpp"
#include "randbf/negcycle.hpp"
#include "randbf/oracle.hpp"

namespace randbf::bench {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 4> kAlgorithmNames{{
    {Algorithm::kBasic, "basic"},
    {Algorithm::kAdaptive, "adaptive"},
    {Algorithm::kYen, "yen"},
    {Algorithm::kRandomized, "randomized"},
}};

constexpr std::array<std::pair<OrderingKind, std::string_view>, 3> kOrderingNames{{
    {OrderingKind::kIdentity, "identity"},
    {OrderingKind::kRandom, "random"},
    {OrderingKind::kAdversarial, "adversarial"},
}};

template <typename Table, typename Key>
std::string_view name_of(const Table& table, Key key) {
  for (const auto& [k, name] : table) {
    if (k == key) return name;
  }
  return "unknown";
}

template <typename Table>
auto key_of(const Table& table, std::string_view name)
    -> std::optional<typename Table::value_type::first_type> {
  for (const auto& [k, text] : table) {
    if (text == name) return k;
  }
  return std::nullopt;
}

std::string describe_trial(const TrialRecord& r) {
  return std::string(r.algorithm) + " seed " + std::to_string(r.seed) + " on " + r.source;
}

Ordering ordering_for(const Graph& g, const TrialConfig& config, std::uint64_t seed) {
  switch (config.algorithm == Algorithm::kRandomized ? OrderingKind::kRandom : config.ordering) {
    case OrderingKind::kIdentity:
      return Ordering::identity(g.vertex_count(), g.source());
    case OrderingKind::kAdversarial:
      if (g.source() != 0 || g.vertex_count() < 2) {
        throw std::invalid_argument("adversarial ordering needs source 0 and n >= 2");
      }
      return adversarial_ordering(g.vertex_count());
    case OrderingKind::kRandom:
      break;
  }
  return random_ordering(g, seed);
}

struct Outcome {
  SsspState state;
  RunStats stats;
  bool cycle_found = false;
};

Outcome execute(const Graph& g, const TrialConfig& config, std::uint64_t seed) {
  if (config.detect_cycles) {
    DetectionResult r = run_with_detection(g, ordering_for(g, config, seed), {config.c, false});
    return {std::move(r.state), r.stats, r.verdict.found};
  }
  SsspResult r;
  switch (config.algorithm) {
    case Algorithm::kBasic:
      r = run_basic(g, {config.strict_count, {}});
      break;
    case Algorithm::kAdaptive:
      r = run_adaptive(g);
      break;
    case Algorithm::kYen:
    case Algorithm::kRandomized:
      r = run_yen(g, ordering_for(g, config, seed));
      break;
  }
  return {std::move(r.state), r.stats, false};
}

void verify(const Outcome& outcome, const oracle::OracleResult& truth, const TrialRecord& record,
            const TrialConfig& config) {
  if (truth.has_reachable_negative_cycle) {
    if (!config.detect_cycles) {
      throw VerificationFailure(describe_trial(record) +
                                ": graph has a reachable negative cycle; distances are undefined");
    }
    if (!outcome.cycle_found) {
      throw VerificationFailure(describe_trial(record) + ": negative cycle missed");
    }
    return;
  }
  if (outcome.cycle_found) {
    throw VerificationFailure(describe_trial(record) + ": false negative-cycle report");
  }
  const std::vector<Weight> expected = truth.distances_from_source();
  for (std::size_t v = 0; v < expected.size(); ++v) {
    if (outcome.state.dist[v] != expected[v]) {
      throw VerificationFailure(describe_trial(record) + ": distance mismatch at vertex " +
                                std::to_string(v) + " (engine " +
                                std::to_string(outcome.state.dist[v]) + ", oracle " +
                                std::to_string(expected[v]) + ")");
    }
  }
}

}  // namespace

std::string_view to_string(Algorithm a) { return name_of(kAlgorithmNames, a); }
std::string_view to_string(OrderingKind k) { return name_of(kOrderingNames, k); }
std::optional<Algorithm> parse_algorithm(std::string_view name) {
  return key_of(kAlgorithmNames, name);
}
std::optional<OrderingKind> parse_ordering_kind(std::string_view name) {
  return key_of(kOrderingNames, name);
}

GraphSource GraphSource::fixed(Graph g, std::string description) {
  auto shared = std::make_shared<const Graph>(std::move(g));
  return {std::move(description), [shared](std::uint64_t) { return shared; }};
}

std::vector<TrialRecord> run_trials(const GraphSource& source, const TrialConfig& config) {
  if (config.detect_cycles && config.algorithm != Algorithm::kYen &&
      config.algorithm != Algorithm::kRandomized) {
    throw std::invalid_argument("cycle detection needs the yen or randomized engine");
  }
  if (config.strict_count && config.algorithm != Algorithm::kBasic) {
    throw std::invalid_argument("strict counting applies to the basic engine only");
  }
  const std::size_t count = config.seeds.size();
  std::vector<TrialRecord> records(count);
  std::vector<std::exception_ptr> errors(count);

  // Graphs shared across seeds get a single oracle run.
  std::shared_ptr<const Graph> cached_graph;
  std::shared_ptr<const oracle::OracleResult> cached_truth;
  std::mutex cache_mutex;
  const auto truth_for = [&](const std::shared_ptr<const Graph>& g) {
    std::lock_guard lock(cache_mutex);
    if (cached_graph != g) {
      cached_truth = std::make_shared<const oracle::OracleResult>(
          oracle::floyd_warshall(*g, config.oracle_cap));
      cached_graph = g;
    }
    return cached_truth;
  };

  const auto run_one = [&](std::size_t index) {
    const std::uint64_t seed = config.seeds[index];
    TrialRecord& record = records[index];
    try {
      const std::shared_ptr<const Graph> g = source.make(seed);
      record.algorithm = to_string(config.algorithm);
      record.seed = seed;
      record.n = g->vertex_count();
      record.m = g->edge_count();
      record.c = config.c;
      record.source = source.description;
      const auto start = std::chrono::steady_clock::now();
      Outcome outcome = execute(*g, config, seed);
      record.wall_time_ns = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                               start)
              .count());
      record.iterations = outcome.stats.iterations;
      record.relax_calls = outcome.stats.relax_calls;
      record.improvements = outcome.stats.improvements;
      record.negative_cycle_found = outcome.cycle_found;
      if (outcome.stats.iteration_cap_hit) {
        throw IterationCapBreach(describe_trial(record) +
                                 ": iteration cap reached (reachable negative cycle?)");
      }
      if (config.check_oracle && g->vertex_count() <= config.oracle_cap) {
        verify(outcome, *truth_for(g), record, config);
      }
    } catch (...) {
      errors[index] = std::current_exception();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) run_one(i);
      });
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  const auto number = [&](std::string_view token) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw std::invalid_argument("bad seed '" + std::string(token) + "'");
    }
    return value;
  };
  std::vector<std::uint64_t> seeds;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      seeds.push_back(number(item));
      continue;
    }
    const std::uint64_t lo = number(item.substr(0, dots));
    const std::uint64_t hi = number(item.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty seed range '" + std::string(item) + "'");
    for (std::uint64_t s = lo;; ++s) {
      seeds.push_back(s);
      if (s == hi) break;
    }
  }
  if (seeds.empty()) throw std::invalid_argument("no seeds given");
  return seeds;
}

}  // namespace randbf::bench
