#ifndef RANDBF_BENCH_TRIALS_HPP
#define RANDBF_BENCH_TRIALS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "randbf/graph.hpp"

namespace randbf::bench {

enum class Algorithm { kBasic, kAdaptive, kYen, kRandomized };
enum class OrderingKind { kIdentity, kRandom, kAdversarial };

std::string_view to_string(Algorithm a);
std::string_view to_string(OrderingKind k);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::optional<OrderingKind> parse_ordering_kind(std::string_view name);

/// One row of benchmark output. Field order is the CSV column order.
struct TrialRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t iterations = 0;
  std::uint64_t relax_calls = 0;
  std::uint64_t improvements = 0;
  std::uint64_t wall_time_ns = 0;
  bool negative_cycle_found = false;
  double c = 0.0;
  std::string source;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Where each trial's graph comes from. `make(seed)` may return the same
/// graph for every seed (file input) or a fresh one (generator per seed).
struct GraphSource {
  std::string description;
  std::function<std::shared_ptr<const Graph>(std::uint64_t seed)> make;

  static GraphSource fixed(Graph g, std::string description);
};

struct TrialConfig {
  Algorithm algorithm = Algorithm::kRandomized;
  /// Ordering used by the yen engine; randomized always draws a random one.
  OrderingKind ordering = OrderingKind::kRandom;
  std::vector<std::uint64_t> seeds;
  double c = 2.0;
  bool check_oracle = false;
  bool detect_cycles = false;
  bool strict_count = false;
  std::size_t oracle_cap = 256;
  unsigned jobs = 1;
};

/// A trial disagreed with the oracle.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An engine hit its iteration cap (a negative cycle without --detect-cycles).
class IterationCapBreach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one trial per seed; records come back in seed-list order regardless
/// of how many worker threads ran them. Throws std::invalid_argument for
/// unusable configurations, VerificationFailure or IterationCapBreach on the
/// first failing trial (by seed order).
std::vector<TrialRecord> run_trials(const GraphSource& source, const TrialConfig& config);

/// Parses "7", "0..999" (inclusive) or comma lists of either.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace randbf::bench

#endif  // RANDBF_BENCH_TRIALS_HPP
