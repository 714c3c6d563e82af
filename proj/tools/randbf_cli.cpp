// randbf: run Bellman-Ford engines over seed batches, generate instances,
// and cross-check engines against the reference oracle.
//
// Exit status: 0 success, 1 verification failure, 2 malformed input,
// 3 negative cycle found under --fail-on-cycle.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "randbf/bench/dimacs.hpp"
#include "randbf/bench/stats_io.hpp"
#include "randbf/bench/trials.hpp"
#include "randbf/engines.hpp"
#include "randbf/generators.hpp"
#include "randbf/negcycle.hpp"
#include "randbf/oracle.hpp"

namespace {

using namespace randbf;
using namespace randbf::bench;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitNegativeCycle = 3;

struct GraphOptions {
  std::string input;
  std::uint64_t source = 1;
  std::string kind = "random-sparse";
  std::size_t n = 0;
  std::size_t m = 0;
  double density = 1.0;
  std::int64_t wmin = -3;
  std::int64_t wmax = 7;
  std::uint64_t gen_seed = 0;
  bool reachable = false;
  bool no_negative_cycle = false;
  std::int64_t potential = 0;
  std::size_t cycle_length = 3;
  std::int64_t cycle_weight = -1;
  bool vary_graph = false;

  void add_to(CLI::App& app) {
    app.add_option("--input", input, "DIMACS .gr file (otherwise a generator is used)");
    app.add_option("--source", source, "1-based source vertex id")->capture_default_str();
    app.add_option("--gen", kind,
                   "generator: path-worst-case, random-sparse, random-dense, planted-cycle, "
                   "alternating-adversary")
        ->capture_default_str();
    app.add_option("--n", n, "generator vertex count");
    app.add_option("--m", m, "generator edge count (sparse, planted-cycle)");
    app.add_option("--density", density, "generator density (random-dense)")->capture_default_str();
    app.add_option("--wmin", wmin, "smallest generated weight")->capture_default_str();
    app.add_option("--wmax", wmax, "largest generated weight")->capture_default_str();
    app.add_option("--gen-seed", gen_seed, "generator seed")->capture_default_str();
    app.add_flag("--reachable", reachable, "make every vertex reachable from the source");
    app.add_flag("--no-neg-cycle", no_negative_cycle,
                 "regenerate until no reachable negative cycle exists");
    app.add_option("--potential", potential, "random vertex potential spread");
    app.add_option("--cycle-length", cycle_length, "planted cycle length")->capture_default_str();
    app.add_option("--cycle-weight", cycle_weight, "planted cycle weight")->capture_default_str();
    app.add_flag("--vary-graph", vary_graph,
                 "regenerate the graph for every trial, using the trial seed as generator seed");
  }

  GeneratorSpec spec(std::uint64_t seed) const {
    const auto parsed = parse_generator_kind(kind);
    if (!parsed) throw std::invalid_argument("unknown generator '" + kind + "'");
    GeneratorSpec s;
    s.kind = *parsed;
    s.n = n;
    s.m = m;
    s.density = density;
    s.weight_min = wmin;
    s.weight_max = wmax;
    s.seed = seed;
    s.ensure_reachable = reachable;
    s.negative_cycle_free = no_negative_cycle;
    s.potential_spread = potential;
    s.cycle_length = cycle_length;
    s.cycle_weight = cycle_weight;
    return s;
  }

  Graph with_requested_source(Graph g) const {
    if (source < 1 || source > g.vertex_count()) {
      throw std::invalid_argument("--source outside [1, n]");
    }
    return source == 1 ? g : g.with_source(static_cast<Vertex>(source - 1));
  }

  GraphSource build() const {
    if (!input.empty()) {
      return GraphSource::fixed(load_dimacs(input, source), "file:" + file_digest(input));
    }
    if (n == 0) throw std::invalid_argument("give --input or a generator with --n");
    if (!vary_graph) {
      const GeneratorSpec s = spec(gen_seed);
      return GraphSource::fixed(with_requested_source(generate(s)), s.describe());
    }
    GeneratorSpec described = spec(gen_seed);
    described.seed = 0;
    std::string description = described.describe();
    description.replace(description.rfind(":seed=0"), 7, ":seed=trial");
    return {description, [options = *this](std::uint64_t seed) {
              return std::make_shared<const Graph>(
                  options.with_requested_source(generate(options.spec(seed))));
            }};
  }
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot write " + path);
  return file;
}

int cmd_run(const GraphOptions& graph, const std::string& algorithm, const std::string& ordering,
            const std::string& seeds, double c, bool check_oracle, bool detect_cycles,
            bool strict_count, bool fail_on_cycle, const std::string& format, unsigned jobs,
            const std::string& output) {
  TrialConfig config;
  const auto algo = parse_algorithm(algorithm);
  const auto ord = parse_ordering_kind(ordering);
  const auto fmt = parse_stats_format(format);
  if (!algo) throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  if (!ord) throw std::invalid_argument("unknown ordering '" + ordering + "'");
  if (!fmt) throw std::invalid_argument("unknown format '" + format + "'");
  if (!(c > 0.0)) throw std::invalid_argument("--c must be positive");
  config.algorithm = *algo;
  config.ordering = *ord;
  config.seeds = parse_seed_list(seeds);
  config.c = c;
  config.check_oracle = check_oracle;
  config.detect_cycles = detect_cycles;
  config.strict_count = strict_count;
  config.jobs = jobs;

  const GraphSource source = graph.build();
  if (detect_cycles) {
    const auto first = source.make(config.seeds.front());
    const std::size_t n = first->vertex_count();
    if (n >= 2 && static_cast<double>(iteration_threshold(n, c)) > n / 2.0 + 2.0) {
      std::cerr << "note: iteration threshold " << iteration_threshold(n, c)
                << " exceeds n/2 + 2; parent-graph checks start at iteration "
                << yen_detection_bound(n) << " instead\n";
    }
  }
  const std::vector<TrialRecord> records = run_trials(source, config);
  std::ofstream file;
  emit_stats(records, *fmt, open_output(output, file));
  if (fail_on_cycle) {
    for (const TrialRecord& r : records) {
      if (r.negative_cycle_found) return kExitNegativeCycle;
    }
  }
  return kExitOk;
}

int cmd_generate(const GraphOptions& graph, const std::string& output) {
  const GraphSource source = graph.build();
  const auto g = source.make(graph.gen_seed);
  std::ofstream file;
  write_dimacs(open_output(output, file), *g, source.description);
  return kExitOk;
}

// Every engine on every seed must agree with the oracle.
int cmd_verify(const GraphOptions& graph, const std::string& seeds, double c) {
  const GraphSource source = graph.build();
  std::size_t failures = 0;
  std::size_t checked = 0;
  for (const std::uint64_t seed : parse_seed_list(seeds)) {
    const auto g = source.make(seed);
    const oracle::OracleResult truth = oracle::floyd_warshall(*g);
    const auto expected = truth.distances_from_source();
    const auto report = [&](std::string_view what, bool ok) {
      ++checked;
      if (ok) return;
      ++failures;
      std::cerr << "FAIL " << what << " seed " << seed << '\n';
    };
    const DetectionResult detected = run_with_detection(*g, seed, {c, false});
    report("detection", detected.verdict.found == truth.has_reachable_negative_cycle);
    if (truth.has_reachable_negative_cycle) continue;
    report("basic", run_basic(*g).state.dist == expected);
    report("adaptive", run_adaptive(*g).state.dist == expected);
    report("yen", run_yen(*g, Ordering::identity(g->vertex_count(), g->source())).state.dist ==
                      expected);
    report("randomized", run_randomized(*g, seed).state.dist == expected);
  }
  std::cout << checked - failures << "/" << checked << " checks passed\n";
  return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instrumented Bellman-Ford engines and benchmark harness"};
  app.require_subcommand(1);

  GraphOptions graph;
  std::string algorithm = "randomized";
  std::string ordering = "random";
  std::string seeds = "0";
  double c = 2.0;
  bool check_oracle = false;
  bool detect_cycles = false;
  bool strict_count = false;
  bool fail_on_cycle = false;
  std::string format = "csv";
  unsigned jobs = 1;
  std::string output;

  CLI::App* run = app.add_subcommand("run", "run an engine over a batch of seeds");
  graph.add_to(*run);
  run->add_option("--algorithm", algorithm, "basic, adaptive, yen or randomized")
      ->capture_default_str();
  run->add_option("--ordering", ordering, "yen ordering: identity, random or adversarial")
      ->capture_default_str();
  run->add_option("--seed,--seeds", seeds, "seed, inclusive range a..b, or comma list")
      ->capture_default_str();
  run->add_option("--c", c, "tail-bound constant for cycle detection")->capture_default_str();
  run->add_flag("--check-oracle", check_oracle, "verify every trial against Floyd-Warshall");
  run->add_flag("--detect-cycles", detect_cycles, "enable parent-graph negative-cycle detection");
  run->add_flag("--strict-count", strict_count, "basic engine: count all m(n-1) relaxations");
  run->add_flag("--fail-on-cycle", fail_on_cycle, "exit 3 if any trial finds a negative cycle");
  run->add_option("--format", format, "csv or json-lines")->capture_default_str();
  run->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  run->add_option("--output,-o", output, "output file (default stdout)");

  CLI::App* gen = app.add_subcommand("generate", "write a generated graph as DIMACS");
  GraphOptions gen_graph;
  std::string gen_output;
  gen_graph.add_to(*gen);
  gen->add_option("--output,-o", gen_output, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "cross-check all engines against the oracle");
  GraphOptions verify_graph;
  std::string verify_seeds = "0";
  verify_graph.add_to(*verify);
  verify->add_option("--seed,--seeds", verify_seeds, "seed, range a..b, or comma list")
      ->capture_default_str();
  verify->add_option("--c", c, "tail-bound constant for cycle detection")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*run) {
      return cmd_run(graph, algorithm, ordering, seeds, c, check_oracle, detect_cycles,
                     strict_count, fail_on_cycle, format, jobs, output);
    }
    if (*gen) return cmd_generate(gen_graph, gen_output);
    return cmd_verify(verify_graph, verify_seeds, c);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const IterationCapBreach& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const DetectionDefect& e) {
    std::cerr << "detection defect: " << e.what() << '\n';
    return kExitVerification;
  } catch (const DimacsError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitMalformed;
  }
}
