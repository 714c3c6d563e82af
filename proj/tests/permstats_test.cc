#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "randbf/engines.hpp"
#include "randbf/generators.hpp"
#include "randbf/permstats.hpp"
#include "randbf/rng.hpp"
#include "test_support.hpp"

namespace randbf {
namespace {

TEST(LocalMinimaTest, Basics) {
  EXPECT_EQ(count_local_minima(std::vector<int>{1, 2, 3}), 0u);
  EXPECT_EQ(count_local_minima(std::vector<int>{3, 1, 2}), 1u);
  EXPECT_EQ(count_local_minima(std::vector<int>{1}), 0u);
  EXPECT_EQ(count_local_minima(std::vector<int>{2, 1}), 0u);
  // Endpoints never count even when smaller than their only neighbor.
  EXPECT_EQ(count_local_minima(std::vector<int>{0, 5, 1, 4, 2, 3}), 2u);
  EXPECT_EQ(count_local_minima(std::vector<double>{0.5, 0.1, 0.9, 0.2, 0.3}), 2u);
}

TEST(LocalMinimaTest, RejectsTies) {
  EXPECT_THROW(count_local_minima(std::vector<int>{3, 1, 3}), std::invalid_argument);
}

TEST(LocalMinimaTest, MeanOverAllPermutationsOfFour) {
  std::vector<int> p{1, 2, 3, 4};
  std::uint64_t total = 0;
  std::uint64_t count = 0;
  do {
    total += count_local_minima(p);
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  // 16 / 24 == 2 / 3
  EXPECT_EQ(count, 24u);
  EXPECT_EQ(total * 3, 2 * count);
}

TEST(LocalMinimaTest, TailThreshold) {
  EXPECT_NEAR(local_minima_tail_threshold(3, 1e-15), 1.0 / 3.0, 1e-6);
  EXPECT_NEAR(local_minima_tail_threshold(100, 1.0), 63.015209254369594, 1e-9);
  EXPECT_THROW(local_minima_tail_threshold(2, 1.0), std::invalid_argument);
  EXPECT_THROW(local_minima_tail_threshold(10, -1.0), std::invalid_argument);
}

TEST(LocalMinimaTest, TailExceedanceFrequency) {
  constexpr std::size_t kLen = 50;
  constexpr int kTrials = 100000;
  const double threshold = local_minima_tail_threshold(kLen, 1.0);
  Rng rng(123);
  std::vector<int> p(kLen);
  int exceed = 0;
  for (int t = 0; t < kTrials; ++t) {
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = kLen; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
    if (static_cast<double>(count_local_minima(p)) > threshold) ++exceed;
  }
  const double bound = 1.0 / kLen;
  EXPECT_LE(static_cast<double>(exceed) / kTrials,
            bound + 4 * std::sqrt(bound * (1 - bound) / kTrials));
}

TEST(LocalMinimaTest, ChangingOneValueMovesCountByAtMostTwo) {
  Rng rng(55);
  for (int t = 0; t < 20000; ++t) {
    const std::size_t len = 1 + rng.below(30);
    std::vector<double> values(len);
    for (double& v : values) v = rng.unit();
    const auto before = static_cast<long long>(count_local_minima(values));
    values[rng.below(len)] = rng.unit();
    const auto after = static_cast<long long>(count_local_minima(values));
    ASSERT_LE(std::llabs(after - before), 2);
  }
}

TEST(AlternationTest, Counts) {
  const Ordering identity = Ordering::identity(4, 0);
  EXPECT_EQ(alternation_count(std::vector<Vertex>{0, 1, 2, 3}, identity), 1u);
  const Ordering zigzag = Ordering::from_ranks({0, 2, 1, 3}, 0);
  EXPECT_EQ(alternation_count(std::vector<Vertex>{0, 1, 2, 3}, zigzag), 3u);
  EXPECT_THROW(alternation_count(std::vector<Vertex>{0}, identity), std::invalid_argument);
  EXPECT_THROW(alternation_count(std::vector<Vertex>{0, 1, 1}, identity), std::invalid_argument);
}

// Along a source-initial path the first run rises, so an iteration (one
// rising run plus one falling run) covers two runs: at most ceil(l/2) of
// them are needed.
TEST(AlternationTest, StructuralBounds) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<Vertex> path(n);
    std::iota(path.begin(), path.end(), Vertex{0});
    const std::size_t edges = n - 1;
    for (const Ordering& ord : testing::all_orderings(n, 0)) {
      const std::uint64_t runs = alternation_count(path, ord);
      ASSERT_LE(runs, edges);
      ASSERT_LE((runs + 1) / 2, (edges + 1) / 2);
      // Yen needs one iteration per rising+falling pair, plus one to confirm.
      ASSERT_EQ(run_yen(worst_case_path(n), ord).stats.iterations, (runs + 1) / 2 + 1);
    }
  }
  EXPECT_EQ(alternation_count(std::vector<Vertex>{0, 1, 2, 3}, adversarial_ordering(4)), 3u);
}

TEST(AlternationTest, IterationsEqualTwoPlusInteriorMinima) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Graph g = worst_case_path(n);
    std::vector<Vertex> path(n);
    std::iota(path.begin(), path.end(), Vertex{0});
    for (const Ordering& ord : testing::all_orderings(n, 0)) {
      const std::vector<Vertex> ranks = rank_sequence(path, ord);
      ASSERT_EQ(run_yen(g, ord).stats.iterations, 2 + count_local_minima(ranks));
    }
  }
}

}  // namespace
}  // namespace randbf
