#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "randbf/bench/dimacs.hpp"
#include "randbf/bench/stats_io.hpp"
#include "randbf/bench/trials.hpp"
#include "randbf/generators.hpp"

namespace randbf::bench {
namespace {

Graph parse(const std::string& text, std::uint64_t source = 1) {
  std::istringstream in(text);
  return parse_dimacs(in, source);
}

DimacsErrorKind error_kind(const std::string& text) {
  try {
    parse(text);
  } catch (const DimacsError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return DimacsErrorKind::kIo;
}

TEST(DimacsTest, MinimalFile) {
  const Graph g = parse("c tiny\np sp 2 1\na 1 2 5\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 5}));
  EXPECT_EQ(g.source(), 0u);
}

TEST(DimacsTest, NegativeWeightsAndSource) {
  const Graph g = parse("p sp 3 2\na 1 2 -7\r\n\na 2 3 0\n", 2);
  EXPECT_EQ(g.edges()[0].weight, -7);
  EXPECT_EQ(g.source(), 1u);
}

TEST(DimacsTest, DistinctDiagnostics) {
  EXPECT_EQ(error_kind("a 1 2 3\n"), DimacsErrorKind::kMissingProblemLine);
  EXPECT_EQ(error_kind("c nothing\n"), DimacsErrorKind::kMissingProblemLine);
  EXPECT_EQ(error_kind("p sp 2 2\na 1 2 5\n"), DimacsErrorKind::kArcCountMismatch);
  EXPECT_EQ(error_kind("p sp 2 1\na 1 3 5\n"), DimacsErrorKind::kVertexOutOfRange);
  EXPECT_EQ(error_kind("p sp 2 1\na 0 2 5\n"), DimacsErrorKind::kVertexOutOfRange);
  EXPECT_EQ(error_kind("p sp 2 1\na 1 2 2.5\n"), DimacsErrorKind::kNonIntegerWeight);
  EXPECT_EQ(error_kind("p sp 2 1\na 1 2 x\n"), DimacsErrorKind::kNonIntegerWeight);
  EXPECT_EQ(error_kind("p max 2 1\n"), DimacsErrorKind::kMalformedLine);
  EXPECT_EQ(error_kind("p sp 2 0\np sp 2 0\n"), DimacsErrorKind::kDuplicateProblemLine);
  EXPECT_EQ(error_kind("p sp 2 0\nz\n"), DimacsErrorKind::kMalformedLine);
  try {
    parse("p sp 2 0\n", 3);
    ADD_FAILURE();
  } catch (const DimacsError& e) {
    EXPECT_EQ(e.kind(), DimacsErrorKind::kSourceOutOfRange);
  }
}

TEST(DimacsTest, WriteThenReadIsStructurallyIdentical) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorSpec spec;
    spec.kind = seed % 2 ? GeneratorKind::kPlantedCycle : GeneratorKind::kRandomSparse;
    spec.n = 15;
    spec.m = 40;
    spec.seed = seed;
    const Graph g = random_graph(spec);
    std::stringstream buffer;
    write_dimacs(buffer, g, spec.describe());
    const Graph back = parse_dimacs(buffer, 1);
    EXPECT_EQ(back.vertex_count(), g.vertex_count());
    EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), back.edges().begin(),
                           back.edges().end()));
  }
  std::stringstream sink;
  EXPECT_THROW(write_dimacs(sink, Graph(2, {{0, 1, 0.5}}, 0)), std::invalid_argument);
}

TEST(SeedListTest, Parses) {
  EXPECT_EQ(parse_seed_list("7"), (std::vector<std::uint64_t>{7}));
  EXPECT_EQ(parse_seed_list("0..3,9"), (std::vector<std::uint64_t>{0, 1, 2, 3, 9}));
  EXPECT_THROW(parse_seed_list("5..2"), std::invalid_argument);
  EXPECT_THROW(parse_seed_list("x"), std::invalid_argument);
  EXPECT_THROW(parse_seed_list(""), std::invalid_argument);
}

TEST(TrialsTest, RandomizedMeanOnWorstCasePath) {
  TrialConfig config;
  config.algorithm = Algorithm::kRandomized;
  config.seeds = parse_seed_list("0..999");
  config.check_oracle = true;
  const auto records = run_trials(GraphSource::fixed(worst_case_path(100), "path"), config);
  ASSERT_EQ(records.size(), 1000u);
  double sum = 0;
  double sum_sq = 0;
  for (const TrialRecord& r : records) {
    sum += static_cast<double>(r.iterations);
    sum_sq += static_cast<double>(r.iterations * r.iterations);
  }
  const double mean = sum / 1000;
  const double sd = std::sqrt((sum_sq - 1000 * mean * mean) / 999);
  EXPECT_NEAR(mean, 103.0 / 3.0, 4 * sd / std::sqrt(1000.0));
}

TEST(TrialsTest, AdversarialYenOnWorstCasePath) {
  TrialConfig config;
  config.algorithm = Algorithm::kYen;
  config.ordering = OrderingKind::kAdversarial;
  config.seeds = {0, 1};
  const auto records = run_trials(GraphSource::fixed(worst_case_path(100), "path"), config);
  for (const TrialRecord& r : records) EXPECT_GE(r.iterations, 48u);
}

TEST(TrialsTest, StrictBasicCountsExactly) {
  GeneratorSpec spec;
  spec.n = 20;
  spec.m = 50;
  spec.negative_cycle_free = true;
  TrialConfig config;
  config.algorithm = Algorithm::kBasic;
  config.strict_count = true;
  config.check_oracle = true;
  config.seeds = parse_seed_list("0..19");
  const GraphSource source{spec.describe(), [spec](std::uint64_t seed) mutable {
                             spec.seed = seed;
                             return std::make_shared<const Graph>(random_graph(spec));
                           }};
  for (const TrialRecord& r : run_trials(source, config)) {
    EXPECT_EQ(r.relax_calls, r.m * (r.n - 1));
  }
}

TEST(TrialsTest, ParallelRunsGiveTheSameRecords) {
  GeneratorSpec spec;
  spec.n = 40;
  spec.m = 200;
  spec.weight_min = 0;
  spec.potential_spread = 6;
  spec.ensure_reachable = true;
  spec.negative_cycle_free = true;
  TrialConfig config;
  config.seeds = parse_seed_list("0..63");
  config.check_oracle = true;
  const GraphSource source = GraphSource::fixed(random_graph(spec), spec.describe());
  auto serial = run_trials(source, config);
  config.jobs = 4;
  auto parallel = run_trials(source, config);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    serial[i].wall_time_ns = parallel[i].wall_time_ns = 0;
    EXPECT_EQ(serial[i], parallel[i]);
  }
}

TEST(TrialsTest, NegativeCycleHandling) {
  const GraphSource source =
      GraphSource::fixed(Graph(3, {{0, 1, 1}, {1, 2, -3}, {2, 1, 1}}, 0), "cycle");
  TrialConfig config;
  config.seeds = {1};
  EXPECT_THROW(run_trials(source, config), IterationCapBreach);
  config.algorithm = Algorithm::kBasic;
  config.check_oracle = true;
  EXPECT_THROW(run_trials(source, config), VerificationFailure);
  config.algorithm = Algorithm::kRandomized;
  config.detect_cycles = true;
  const auto records = run_trials(source, config);
  EXPECT_TRUE(records[0].negative_cycle_found);
  config.algorithm = Algorithm::kAdaptive;
  EXPECT_THROW(run_trials(source, config), std::invalid_argument);
}

TEST(StatsTest, CsvShape) {
  std::ostringstream empty;
  emit_stats({}, StatsFormat::kCsv, empty);
  EXPECT_EQ(empty.str(), std::string(kCsvHeader) + "\n");

  const std::vector<TrialRecord> records{
      {"yen", 3, 4, 5, 2, 7, 4, 1234, false, 2.0, "random-sparse:n=4,m=5"}};
  std::ostringstream one;
  emit_stats(records, StatsFormat::kCsv, one);
  EXPECT_EQ(one.str(), std::string(kCsvHeader) +
                           "\nyen,3,4,5,2,7,4,1234,false,2,\"random-sparse:n=4,m=5\"\n");
}

TEST(StatsTest, JsonLinesAndDeterminism) {
  const std::vector<TrialRecord> records{
      {"randomized", 0, 10, 9, 4, 12, 9, 50, true, 1.5, "path"},
      {"randomized", 1, 10, 9, 3, 11, 9, 60, false, 1.5, "path"}};
  std::ostringstream a;
  std::ostringstream b;
  emit_stats(records, StatsFormat::kJsonLines, a);
  emit_stats(records, StatsFormat::kJsonLines, b);
  EXPECT_EQ(a.str(), b.str());
  const std::string first = a.str().substr(0, a.str().find('\n'));
  EXPECT_EQ(first,
            "{\"algorithm\":\"randomized\",\"seed\":0,\"n\":10,\"m\":9,\"iterations\":4,"
            "\"relax_calls\":12,\"improvements\":9,\"wall_time_ns\":50,"
            "\"negative_cycle_found\":true,\"c\":1.5,\"source\":\"path\"}");
  EXPECT_EQ(parse_stats_format("json-lines"), StatsFormat::kJsonLines);
  EXPECT_FALSE(parse_stats_format("xml"));
}

}  // namespace
}  // namespace randbf::bench
