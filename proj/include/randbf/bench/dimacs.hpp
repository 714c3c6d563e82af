#ifndef RANDBF_BENCH_DIMACS_HPP
#define RANDBF_BENCH_DIMACS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "randbf/graph.hpp"

namespace randbf::bench {

/// DIMACS shortest-path (.gr) reading and writing.
///
///   c <comment>
///   p sp <n> <m>
///   a <u> <v> <w>        (1-based ids, integer weight, negative allowed)
///
/// The optional source line is not read; the source is passed in as a
/// 1-based id.

enum class DimacsErrorKind {
  kIo,
  kMissingProblemLine,
  kDuplicateProblemLine,
  kMalformedLine,
  kArcCountMismatch,
  kVertexOutOfRange,
  kNonIntegerWeight,
  kSourceOutOfRange,
};

class DimacsError : public std::runtime_error {
 public:
  DimacsError(DimacsErrorKind kind, std::size_t line, const std::string& what);

  DimacsErrorKind kind() const { return kind_; }
  /// 1-based line number, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  DimacsErrorKind kind_;
  std::size_t line_;
};

Graph parse_dimacs(std::istream& in, std::uint64_t source_id = 1);
Graph load_dimacs(const std::filesystem::path& path, std::uint64_t source_id = 1);

/// Writes `g` with 1-based ids. Weights must be integer-valued.
void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = {});

/// 64-bit FNV-1a digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

}  // namespace randbf::bench

#endif  // RANDBF_BENCH_DIMACS_HPP
