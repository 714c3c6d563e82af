#include "randbf/bench/stats_io.hpp"

#include <charconv>
#include <ostream>
#include <string>

#include <json.hpp>

namespace randbf::bench {
namespace {

// Shortest round-trip representation; identical on every run.
std::string format_real(double value) {
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

std::optional<StatsFormat> parse_stats_format(std::string_view name) {
  if (name == "csv") return StatsFormat::kCsv;
  if (name == "json-lines") return StatsFormat::kJsonLines;
  return std::nullopt;
}

void emit_stats(std::span<const TrialRecord> records, StatsFormat format, std::ostream& out) {
  if (format == StatsFormat::kCsv) {
    out << kCsvHeader << '\n';
    for (const TrialRecord& r : records) {
      out << csv_field(r.algorithm) << ',' << r.seed << ',' << r.n << ',' << r.m << ','
          << r.iterations << ',' << r.relax_calls << ',' << r.improvements << ','
          << r.wall_time_ns << ',' << (r.negative_cycle_found ? "true" : "false") << ','
          << format_real(r.c) << ',' << csv_field(r.source) << '\n';
    }
    return;
  }
  for (const TrialRecord& r : records) {
    nlohmann::ordered_json row;
    row["algorithm"] = r.algorithm;
    row["seed"] = r.seed;
    row["n"] = r.n;
    row["m"] = r.m;
    row["iterations"] = r.iterations;
    row["relax_calls"] = r.relax_calls;
    row["improvements"] = r.improvements;
    row["wall_time_ns"] = r.wall_time_ns;
    row["negative_cycle_found"] = r.negative_cycle_found;
    row["c"] = r.c;
    row["source"] = r.source;
    out << row.dump() << '\n';
  }
}

}  // namespace randbf::bench
