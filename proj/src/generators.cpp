#include "randbf/generators.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "randbf/oracle.hpp"
#include "randbf/rng.hpp"

namespace randbf {
namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 5> kKindNames{{
    {GeneratorKind::kPathWorstCase, "path-worst-case"},
    {GeneratorKind::kRandomSparse, "random-sparse"},
    {GeneratorKind::kRandomDense, "random-dense"},
    {GeneratorKind::kPlantedCycle, "planted-cycle"},
    {GeneratorKind::kAlternatingAdversary, "alternating-adversary"},
}};

bool is_path_kind(GeneratorKind kind) {
  return kind == GeneratorKind::kPathWorstCase || kind == GeneratorKind::kAlternatingAdversary;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1); }

std::size_t target_edges(const GeneratorSpec& spec) {
  if (spec.kind == GeneratorKind::kRandomDense) {
    return static_cast<std::size_t>(spec.density * static_cast<double>(pair_count(spec.n)) + 0.5);
  }
  return spec.m;
}

// Ordered pair (u, v), u != v, encoded as u * n + v.
class PairSet {
 public:
  explicit PairSet(std::size_t n) : n_(n), used_(n * n, 0) {}
  bool insert(Vertex u, Vertex v) {
    char& slot = used_[static_cast<std::size_t>(u) * n_ + v];
    if (slot) return false;
    slot = 1;
    return true;
  }
  bool contains(Vertex u, Vertex v) const { return used_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<char> used_;
};

Graph build_once(const GeneratorSpec& spec, std::uint64_t seed) {
  const std::size_t n = spec.n;
  const std::size_t m = target_edges(spec);
  const Vertex source = 0;
  Rng rng(seed);
  PairSet used(n);
  std::vector<Edge> edges;
  edges.reserve(m);
  const auto draw_weight = [&] {
    return static_cast<Weight>(rng.between(spec.weight_min, spec.weight_max));
  };

  // Planted cycle on distinct vertices c0 -> c1 -> ... -> c0.
  if (spec.kind == GeneratorKind::kPlantedCycle) {
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (std::size_t i = 0; i < spec.cycle_length; ++i) {
      std::swap(pool[i], pool[i + rng.below(n - i)]);
    }
    Weight sum = 0.0;
    for (std::size_t i = 0; i < spec.cycle_length; ++i) {
      const Vertex u = pool[i];
      const Vertex v = pool[(i + 1) % spec.cycle_length];
      const Weight w = i + 1 == spec.cycle_length ? static_cast<Weight>(spec.cycle_weight) - sum
                                                  : draw_weight();
      sum += w;
      used.insert(u, v);
      edges.push_back({u, v, w});
    }
  }

  // Zero-weight arborescence: each vertex, in random order, hangs off a
  // uniformly chosen vertex that is already attached.
  if (spec.ensure_reachable || spec.kind == GeneratorKind::kPlantedCycle) {
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n; ++v) {
      if (v != source) order.push_back(v);
    }
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.below(i)]);
    }
    std::vector<Vertex> attached{source};
    for (Vertex v : order) {
      const Vertex p = attached[rng.below(attached.size())];
      if (used.insert(p, v)) edges.push_back({p, v, 0.0});
      attached.push_back(v);
    }
  }

  if (edges.size() > m) {
    throw std::invalid_argument("generator: m is too small for the required edges");
  }

  // Fill the rest with distinct random pairs: partial Fisher-Yates over the
  // still-unused pairs.
  std::vector<std::pair<Vertex, Vertex>> free_pairs;
  free_pairs.reserve(pair_count(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !used.contains(u, v)) free_pairs.emplace_back(u, v);
    }
  }
  const std::size_t extra = m - edges.size();
  if (extra > free_pairs.size()) {
    throw std::invalid_argument("generator: not enough vertex pairs for m edges");
  }
  for (std::size_t i = 0; i < extra; ++i) {
    std::swap(free_pairs[i], free_pairs[i + rng.below(free_pairs.size() - i)]);
    const auto [u, v] = free_pairs[i];
    edges.push_back({u, v, draw_weight()});
  }

  if (spec.potential_spread > 0) {
    std::vector<Weight> potential(n);
    for (Weight& p : potential) p = static_cast<Weight>(rng.between(0, spec.potential_spread));
    for (Edge& e : edges) e.weight += potential[e.tail] - potential[e.head];
  }
  return Graph(n, std::move(edges), source);
}

}  // namespace

Graph worst_case_path(std::size_t n) {
  if (n < 2) throw std::invalid_argument("worst_case_path needs n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return Graph(n, std::move(edges), 0);
}

Graph complete_worst_case(std::size_t n, std::optional<Weight> off_path_weight) {
  if (n < 2) throw std::invalid_argument("complete_worst_case needs n >= 2");
  const Weight heavy = off_path_weight.value_or(static_cast<Weight>(n));
  if (!(heavy > static_cast<Weight>(n - 1))) {
    throw std::invalid_argument("complete_worst_case: off-path weight must exceed n - 1");
  }
  std::vector<Edge> edges;
  edges.reserve(pair_count(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      edges.push_back({u, v, v == u + 1 ? 1.0 : heavy});
    }
  }
  return Graph(n, std::move(edges), 0);
}

Ordering adversarial_ordering(std::size_t n) {
  if (n < 2) throw std::invalid_argument("adversarial_ordering needs n >= 2");
  std::vector<Vertex> ranks(n);
  Vertex low = 1;
  auto high = static_cast<Vertex>(n - 1);
  for (Vertex pos = 1; pos < n; ++pos) {
    ranks[pos] = pos % 2 == 1 ? high-- : low++;
  }
  return Ordering::from_ranks(std::move(ranks), 0);
}

std::string_view to_string(GeneratorKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (const auto& [k, text] : kKindNames) {
    if (text == name) return k;
  }
  return std::nullopt;
}

void GeneratorSpec::validate() const {
  if (n < 1) throw std::invalid_argument("generator: n must be positive");
  if (is_path_kind(kind)) {
    if (n < 2) throw std::invalid_argument("generator: path kinds need n >= 2");
    return;
  }
  if (weight_min > weight_max) throw std::invalid_argument("generator: empty weight range");
  if (potential_spread < 0) throw std::invalid_argument("generator: negative potential spread");
  if (kind == GeneratorKind::kRandomDense && !(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("generator: density must lie in [0, 1]");
  }
  if (target_edges(*this) > pair_count(n)) {
    throw std::invalid_argument("generator: m exceeds n(n-1)");
  }
  if ((ensure_reachable || kind == GeneratorKind::kPlantedCycle) && target_edges(*this) < n - 1) {
    throw std::invalid_argument("generator: reachability needs m >= n - 1");
  }
  if (kind == GeneratorKind::kPlantedCycle) {
    if (cycle_length < 2 || cycle_length > n) {
      throw std::invalid_argument("generator: cycle length must lie in [2, n]");
    }
    if (m < cycle_length) throw std::invalid_argument("generator: m is smaller than the cycle");
  }
}

std::string GeneratorSpec::describe() const {
  std::string out(to_string(kind));
  out += ":n=" + std::to_string(n);
  if (is_path_kind(kind)) return out;
  if (kind == GeneratorKind::kRandomDense) {
    out += ":m=" + std::to_string(target_edges(*this));
  } else {
    out += ":m=" + std::to_string(m);
  }
  out += ":w=" + std::to_string(weight_min) + ".." + std::to_string(weight_max);
  if (kind == GeneratorKind::kPlantedCycle) {
    out += ":cycle=" + std::to_string(cycle_length) + "/" + std::to_string(cycle_weight);
  }
  if (potential_spread > 0) out += ":potential=" + std::to_string(potential_spread);
  if (ensure_reachable) out += ":reachable";
  if (negative_cycle_free) out += ":nocycle";
  out += ":seed=" + std::to_string(seed);
  return out;
}

Graph random_graph(const GeneratorSpec& spec) {
  spec.validate();
  if (is_path_kind(spec.kind)) {
    throw std::invalid_argument("random_graph: path kinds are deterministic, use generate()");
  }
  if (!spec.negative_cycle_free) return build_once(spec, spec.seed);
  if (spec.kind == GeneratorKind::kPlantedCycle) {
    throw std::invalid_argument("generator: a planted cycle cannot be negative-cycle free");
  }
  constexpr std::uint64_t kMaxAttempts = 100000;
  for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? spec.seed : mix_seed(spec.seed, attempt);
    Graph g = build_once(spec, seed);
    if (!oracle::floyd_warshall(g, spec.n).has_reachable_negative_cycle) return g;
  }
  throw std::invalid_argument("generator: no negative-cycle-free graph found; widen the weights");
}

Graph generate(const GeneratorSpec& spec) {
  spec.validate();
  if (is_path_kind(spec.kind)) return worst_case_path(spec.n);
  return random_graph(spec);
}

}  // namespace randbf
