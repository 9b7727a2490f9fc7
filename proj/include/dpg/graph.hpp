#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dpg {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(adj_[v].size()); }
  std::int32_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  // W(u, v) in {0, 1}.
  int w(Vertex u, Vertex v) const { return adjacent(u, v) ? 1 : 0; }

  // Edge list with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static constexpr Vertex kMatrixLimit = 4096;

  Vertex n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;  // n*n, only when n <= kMatrixLimit
};

}  // namespace dpg
