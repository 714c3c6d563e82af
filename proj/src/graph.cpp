#include "randbf/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace randbf {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, Vertex source)
    : vertex_count_(vertex_count), source_(source), edges_(std::move(edges)) {
  if (vertex_count_ == 0) {
    throw std::invalid_argument("graph must have at least one vertex");
  }
  if (vertex_count_ >= kNoVertex) {
    throw std::invalid_argument("vertex count exceeds the index range");
  }
  if (source_ >= vertex_count_) {
    throw std::invalid_argument("source " + std::to_string(source_) +
                                " is not a vertex");
  }
  out_offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " has an endpoint outside [0, n)");
    }
    if (!std::isfinite(e.weight)) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " has a non-finite weight");
    }
    ++out_offsets_[e.tail + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
  }
  out_edges_.resize(edges_.size());
  std::vector<std::size_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    out_edges_[cursor[e.tail]++] = e;
  }
}

std::span<const Edge> Graph::out_edges(Vertex u) const {
  return std::span<const Edge>(out_edges_).subspan(
      out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]);
}

Graph Graph::with_source(Vertex source) const {
  return Graph(vertex_count_, edges_, source);
}

}  // namespace randbf
