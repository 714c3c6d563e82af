#include <cmath>
#include <optional>
#include <vector>

#include "gtest/gtest.h"
#include "randbf/engines.hpp"
#include "randbf/generators.hpp"
#include "randbf/negcycle.hpp"
#include "randbf/oracle.hpp"
#include "randbf/rng.hpp"
#include "test_support.hpp"

namespace randbf {
namespace {

constexpr Vertex kNone = kNoVertex;

TEST(ParentCycleTest, ForestHasNoCycle) {
  EXPECT_FALSE(detect_cycle_in_parent_graph(std::vector<Vertex>{kNone, 0, 1}));
  EXPECT_FALSE(detect_cycle_in_parent_graph(std::vector<Vertex>{kNone, kNone, kNone}));
  EXPECT_FALSE(detect_cycle_in_parent_graph(std::vector<Vertex>{}));
}

TEST(ParentCycleTest, FindsTwoCycleAndSelfLoop) {
  EXPECT_EQ(detect_cycle_in_parent_graph(std::vector<Vertex>{kNone, 2, 1}),
            (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(detect_cycle_in_parent_graph(std::vector<Vertex>{kNone, 1}),
            (std::vector<Vertex>{1}));
  // Tail 0 -> 3 leads into the cycle 3 -> 4 -> 2 -> 3.
  EXPECT_EQ(detect_cycle_in_parent_graph(std::vector<Vertex>{3, kNone, 3, 4, 2}),
            (std::vector<Vertex>{3, 4, 2}));
}

TEST(ParentCycleTest, RejectsOutOfRangePointer) {
  EXPECT_THROW(detect_cycle_in_parent_graph(std::vector<Vertex>{5}), std::invalid_argument);
}

TEST(ThresholdTest, Values) {
  EXPECT_EQ(iteration_threshold(2, 1e-12), 3u);
  // ceil(9 + 2 + sqrt(54 ln 27)) = ceil(24.34...)
  EXPECT_EQ(iteration_threshold(27, 1.0), 25u);
  EXPECT_EQ(iteration_threshold(12, 2.0), 17u);
  EXPECT_THROW(iteration_threshold(1, 1.0), std::invalid_argument);
  EXPECT_THROW(iteration_threshold(5, 0.0), std::invalid_argument);
  EXPECT_EQ(yen_detection_bound(12), 7u);
  EXPECT_EQ(yen_detection_bound(11), 6u);
  EXPECT_EQ(detection_iteration_cap(12), 8u);
  EXPECT_EQ(detection_iteration_cap(11), 8u);
}

TEST(ThresholdTest, FallbackWhenThresholdExceedsHalfN) {
  const DetectionResult small = run_with_detection(worst_case_path(12), 0, {2.0, false});
  EXPECT_TRUE(small.threshold_fallback);
  EXPECT_EQ(small.first_check_iteration, yen_detection_bound(12));

  const DetectionResult large = run_with_detection(worst_case_path(600), 0, {1.0, false});
  EXPECT_FALSE(large.threshold_fallback);
  EXPECT_EQ(large.first_check_iteration, iteration_threshold(600, 1.0));
  EXPECT_FALSE(large.verdict.found);
}

TEST(DetectionTest, TwoVertexNegativeCycle) {
  const Graph g(2, {{0, 1, 1}, {1, 0, -3}}, 0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DetectionResult r = run_with_detection(g, seed);
    ASSERT_TRUE(r.verdict.found);
    EXPECT_EQ(r.verdict.cycle_weight, -2);
    EXPECT_EQ(r.verdict.cycle.size(), 2u);
    EXPECT_EQ(r.stats.negative_cycle, r.verdict.cycle);
  }
}

TEST(DetectionTest, NegativeSelfLoop) {
  const Graph g(3, {{0, 1, 1}, {1, 1, -1}, {1, 2, 1}}, 0);
  const DetectionResult r = run_with_detection(g, 4);
  ASSERT_TRUE(r.verdict.found);
  EXPECT_EQ(r.verdict.cycle, (std::vector<Vertex>{1}));
  EXPECT_EQ(r.verdict.cycle_weight, -1);
}

TEST(DetectionTest, UnreachableCycleIsOutOfScope) {
  const Graph g(4, {{0, 1, 1}, {2, 3, -5}, {3, 2, 1}}, 0);
  const DetectionResult r = run_with_detection(g, 1);
  EXPECT_FALSE(r.verdict.found);
  EXPECT_FALSE(oracle::floyd_warshall(g).has_reachable_negative_cycle);
}

TEST(DetectionTest, CycleFreeGraphsMatchRandomizedEngine) {
  Rng rng(5);
  int checked = 0;
  while (checked < 200) {
    const Graph g = testing::small_random_graph(rng, 8, 20, -2, 8);
    if (oracle::floyd_warshall(g).has_reachable_negative_cycle) continue;
    ++checked;
    const std::uint64_t seed = rng.next();
    const DetectionResult r = run_with_detection(g, seed);
    EXPECT_FALSE(r.verdict.found);
    EXPECT_EQ(r.state.dist, run_randomized(g, seed).state.dist);
  }
}

TEST(DetectionTest, PlantedTrianglesAreAlwaysFound) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kPlantedCycle;
  spec.n = 12;
  spec.m = 30;
  spec.weight_min = 0;
  spec.weight_max = 10;
  spec.cycle_length = 3;
  spec.cycle_weight = -1;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    spec.seed = seed;
    const Graph g = random_graph(spec);
    const DetectionResult r = run_with_detection(g, seed * 7 + 1);
    ASSERT_TRUE(r.verdict.found) << "seed " << seed;
    EXPECT_LT(r.verdict.cycle_weight, 0);
    EXPECT_LE(r.stats.iterations, detection_iteration_cap(12));
  }
}

// Oracle agreement on sampled small graphs with weights in {-3..3}; the
// every-iteration debug mode must agree too.
TEST(DetectionTest, AgreesWithOracleOnSmallGraphs) {
  Rng rng(77);
  int with_cycle = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const Graph g = testing::small_random_graph(rng, n, rng.below(2 * n * n), -3, 3, true);
    const bool truth = oracle::floyd_warshall(g).has_reachable_negative_cycle;
    with_cycle += truth;
    for (bool every : {false, true}) {
      const DetectionResult r = run_with_detection(g, rng.next(), {2.0, every});
      ASSERT_EQ(r.verdict.found, truth) << "trial " << trial;
      ASSERT_LE(r.stats.iterations, detection_iteration_cap(n));
      if (!r.verdict.found) continue;
      Weight sum = 0;
      const std::size_t k = r.verdict.cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        const Edge& e = r.verdict.cycle_edges[i];
        ASSERT_EQ(e.tail, r.verdict.cycle[i]);
        ASSERT_EQ(e.head, r.verdict.cycle[(i + 1) % k]);
        ASSERT_NE(std::find(g.edges().begin(), g.edges().end(), e), g.edges().end());
        sum += e.weight;
      }
      ASSERT_LT(sum, 0);
      ASSERT_EQ(sum, r.verdict.cycle_weight);
    }
  }
  EXPECT_GT(with_cycle, 300);
}

// Whenever some tentative distance drops below the shortest simple path
// length, the parent graph has a cycle.
TEST(DetectionTest, BelowSimplePathLengthImpliesParentCycle) {
  Rng rng(31);
  int triggered = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    const Graph g = testing::small_random_graph(rng, n, 1 + rng.below(3 * n), -4, 3, true);
    const std::vector<Weight> simple = oracle::shortest_simple_path_lengths(g);
    EngineOptions options;
    options.max_iterations = 3 * n;
    options.after_iteration = [&](const SsspState& state, const RunStats&) {
      bool below = false;
      for (Vertex v = 0; v < n; ++v) {
        if (state.reached(v) && state.dist[v] < simple[v]) below = true;
      }
      if (below) {
        ++triggered;
        EXPECT_TRUE(detect_cycle_in_parent_graph(state.parent).has_value());
      }
      return IterationControl::kContinue;
    };
    run_yen(g, random_ordering(g, rng.next()), options);
  }
  EXPECT_GT(triggered, 100);
}

// After iteration_threshold(6, 2) iterations no tentative distance exceeds
// the shortest simple path length.
TEST(DetectionTest, SimplePathLengthsSettledByThreshold) {
  Rng rng(8);
  const std::uint64_t threshold = iteration_threshold(6, 2.0);
  int graphs = 0;
  while (graphs < 20) {
    const Graph g = testing::small_random_graph(rng, 6, 14, -3, 5);
    ++graphs;
    const std::vector<Weight> simple = oracle::shortest_simple_path_lengths(g);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      EngineOptions options;
      options.max_iterations = threshold;
      const SsspResult r = run_yen(g, random_ordering(g, seed), options);
      for (Vertex v = 0; v < 6; ++v) {
        if (simple[v] != kUnreached) ASSERT_LE(r.state.dist[v], simple[v]);
      }
    }
  }
}

TEST(MonteCarloTest, BudgetFormula) {
  EXPECT_NEAR(dense_relaxation_budget(30, 2.0), 22682.3096854487, 1e-6);
  EXPECT_THROW(dense_relaxation_budget(0, 2.0), std::invalid_argument);
}

TEST(MonteCarloTest, CycleFreeGraphGetsNoneWithDistances) {
  const Graph g = complete_worst_case(15);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MonteCarloResult r = monte_carlo_dense_detect(g, seed);
    EXPECT_FALSE(r.verdict.found);
    EXPECT_EQ(r.state.dist, run_basic(g).state.dist);
    EXPECT_LE(static_cast<double>(r.stats.relax_calls), r.budget);
  }
}

TEST(MonteCarloTest, NegativeTwoCycleExhaustsBudget) {
  const Graph g(3, {{0, 1, 1}, {1, 2, -2}, {2, 1, 1}}, 0);
  const MonteCarloResult r = monte_carlo_dense_detect(g, 3);
  EXPECT_TRUE(r.verdict.found);
  EXPECT_TRUE(r.verdict.cycle.empty());
  EXPECT_GT(static_cast<double>(r.stats.relax_calls), r.budget);
}

}  // namespace
}  // namespace randbf
