#ifndef RANDBF_PERMSTATS_HPP
#define RANDBF_PERMSTATS_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "randbf/graph.hpp"
#include "randbf/ordering.hpp"

namespace randbf {

/// Number of interior positions j (0 < j < len-1) with
/// values[j] < values[j-1] and values[j] < values[j+1]. Endpoints never
/// count. Throws std::invalid_argument if any two values are equal.
template <std::totally_ordered T>
std::uint64_t count_local_minima(std::span<const T> values) {
  std::vector<T> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("count_local_minima: values must be distinct");
  }
  std::uint64_t minima = 0;
  for (std::size_t j = 1; j + 1 < values.size(); ++j) {
    if (values[j] < values[j - 1] && values[j] < values[j + 1]) ++minima;
  }
  return minima;
}

template <std::totally_ordered T>
std::uint64_t count_local_minima(const std::vector<T>& values) {
  return count_local_minima(std::span<const T>(values));
}

/// (n-2)/3 + sqrt(2 c n ln n); a uniformly random sequence of length n has
/// more local minima than this with probability at most 1/n^c.
/// Throws std::invalid_argument for n < 3 or c <= 0.
double local_minima_tail_threshold(std::size_t n, double c);

/// Number of maximal monotone runs of rank along `path`. Throws
/// std::invalid_argument if the path has no edge or two consecutive
/// vertices share a rank.
std::uint64_t alternation_count(std::span<const Vertex> path, const Ordering& ord);

/// Ranks of `path`'s vertices, in path order.
std::vector<Vertex> rank_sequence(std::span<const Vertex> path, const Ordering& ord);

}  // namespace randbf

#endif  // RANDBF_PERMSTATS_HPP
