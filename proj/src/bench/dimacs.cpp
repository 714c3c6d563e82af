#include "randbf/bench/dimacs.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace randbf::bench {
namespace {

std::string located(std::size_t line, const std::string& what) {
  return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
bool parse_whole(std::string_view token, T& value) {
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && end == token.data() + token.size();
}

}  // namespace

DimacsError::DimacsError(DimacsErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error(located(line, what)), kind_(kind), line_(line) {}

Graph parse_dimacs(std::istream& in, std::uint64_t source_id) {
  std::string text;
  std::size_t line_no = 0;
  bool have_problem = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = split(text);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_problem) {
        throw DimacsError(DimacsErrorKind::kDuplicateProblemLine, line_no, "second problem line");
      }
      if (tokens.size() != 4 || tokens[1] != "sp" || !parse_whole(tokens[2], n) ||
          !parse_whole(tokens[3], m) || n == 0) {
        throw DimacsError(DimacsErrorKind::kMalformedLine, line_no,
                          "expected 'p sp <n> <m>' with n >= 1");
      }
      have_problem = true;
      edges.reserve(m);
    } else if (tokens[0] == "a") {
      if (!have_problem) {
        throw DimacsError(DimacsErrorKind::kMissingProblemLine, line_no,
                          "arc line before the problem line");
      }
      std::uint64_t u = 0;
      std::uint64_t v = 0;
      std::int64_t w = 0;
      if (tokens.size() != 4 || !parse_whole(tokens[1], u) || !parse_whole(tokens[2], v)) {
        throw DimacsError(DimacsErrorKind::kMalformedLine, line_no, "expected 'a <u> <v> <w>'");
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        throw DimacsError(DimacsErrorKind::kVertexOutOfRange, line_no,
                          "vertex id outside [1, " + std::to_string(n) + "]");
      }
      if (!parse_whole(tokens[3], w)) {
        throw DimacsError(DimacsErrorKind::kNonIntegerWeight, line_no,
                          "weight '" + std::string(tokens[3]) + "' is not an integer");
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1),
                       static_cast<Weight>(w)});
    } else if (tokens[0] == "n") {
      // Source designator lines are tolerated and ignored.
    } else {
      throw DimacsError(DimacsErrorKind::kMalformedLine, line_no,
                        "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (in.bad()) throw DimacsError(DimacsErrorKind::kIo, 0, "read error");
  if (!have_problem) {
    throw DimacsError(DimacsErrorKind::kMissingProblemLine, 0, "no 'p sp' problem line");
  }
  if (edges.size() != m) {
    throw DimacsError(DimacsErrorKind::kArcCountMismatch, 0,
                      "problem line declares " + std::to_string(m) + " arcs, found " +
                          std::to_string(edges.size()));
  }
  if (source_id < 1 || source_id > n) {
    throw DimacsError(DimacsErrorKind::kSourceOutOfRange, 0,
                      "source " + std::to_string(source_id) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  return Graph(n, std::move(edges), static_cast<Vertex>(source_id - 1));
}

Graph load_dimacs(const std::filesystem::path& path, std::uint64_t source_id) {
  std::ifstream in(path);
  if (!in) throw DimacsError(DimacsErrorKind::kIo, 0, "cannot open " + path.string());
  return parse_dimacs(in, source_id);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    if (e.weight != std::trunc(e.weight)) {
      throw std::invalid_argument("write_dimacs: weights must be integer-valued");
    }
    out << "a " << e.tail + 1 << ' ' << e.head + 1 << ' ' << static_cast<std::int64_t>(e.weight)
        << '\n';
  }
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DimacsError(DimacsErrorKind::kIo, 0, "cannot open " + path.string());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buffer[4096];
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace randbf::bench
