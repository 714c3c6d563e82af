#ifndef RANDBF_BENCH_STATS_IO_HPP
#define RANDBF_BENCH_STATS_IO_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "randbf/bench/trials.hpp"

namespace randbf::bench {

enum class StatsFormat { kCsv, kJsonLines };

std::optional<StatsFormat> parse_stats_format(std::string_view name);

/// CSV header, in TrialRecord field order.
inline constexpr std::string_view kCsvHeader =
    "algorithm,seed,n,m,iterations,relax_calls,improvements,wall_time_ns,"
    "negative_cycle_found,c,source";

/// CSV: header plus one line per record. JSON lines: one object per record
/// with the CSV column names as keys, in the same order.
void emit_stats(std::span<const TrialRecord> records, StatsFormat format, std::ostream& out);

}  // namespace randbf::bench

#endif  // RANDBF_BENCH_STATS_IO_HPP
