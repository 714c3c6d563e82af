#include "randbf/permstats.hpp"

#include <cmath>

namespace randbf {

double local_minima_tail_threshold(std::size_t n, double c) {
  if (n < 3) throw std::invalid_argument("local_minima_tail_threshold needs n >= 3");
  if (!(c > 0.0)) throw std::invalid_argument("local_minima_tail_threshold needs c > 0");
  const double nn = static_cast<double>(n);
  return (nn - 2.0) / 3.0 + std::sqrt(2.0 * c * nn * std::log(nn));
}

std::uint64_t alternation_count(std::span<const Vertex> path, const Ordering& ord) {
  if (path.size() < 2) throw std::invalid_argument("alternation_count needs at least one edge");
  std::uint64_t runs = 0;
  int previous = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Vertex a = ord.rank(path[i]);
    const Vertex b = ord.rank(path[i + 1]);
    if (a == b) throw std::invalid_argument("alternation_count: consecutive vertices share a rank");
    const int direction = a < b ? 1 : -1;
    if (direction != previous) ++runs;
    previous = direction;
  }
  return runs;
}

std::vector<Vertex> rank_sequence(std::span<const Vertex> path, const Ordering& ord) {
  std::vector<Vertex> ranks;
  ranks.reserve(path.size());
  for (Vertex v : path) ranks.push_back(ord.rank(v));
  return ranks;
}

}  // namespace randbf
