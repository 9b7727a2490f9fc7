#include "dpg/graph.hpp"

#include <algorithm>
#include <string>

#include "dpg/error.hpp"

namespace dpg {

Graph::Graph(Vertex n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(Vertex n, std::span<const Edge> edges) : n_(n), adj_(n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative vertex count");
  for (auto [u, v] : edges) {
    if (!valid_vertex(u) || !valid_vertex(v)) {
      fail(ErrorCode::InvalidArgument,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) fail(ErrorCode::InvalidArgument, "self-loop at " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      fail(ErrorCode::InvalidArgument, "duplicate edge");
    }
  }
  m_ = static_cast<std::int64_t>(edges.size());
  if (n_ <= kMatrixLimit) {
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (auto [u, v] : edges) {
      matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
      matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }
  }
}

std::int32_t Graph::max_degree() const {
  std::int32_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!matrix_.empty()) return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace dpg
