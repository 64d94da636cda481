#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pushsum {

using Edge = std::pair<int, int>;

// Finite simple graph, directed or undirected. Undirected edges are stored
// once with u <= v; the edge list is kept sorted so serialization is stable.
class Graph {
 public:
  Graph() = default;

  // Throws Error(InvalidGraph) on out-of-range endpoints or duplicate edges.
  Graph(std::size_t n, bool directed, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Out-neighbours (undirected: all neighbours), ascending.
  const std::vector<int>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::vector<std::size_t> degrees() const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool has_edge(int u, int v) const;

  // Strong connectivity for directed graphs.
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Edge-list text format:
//   n <N> directed <0|1>
//   u v
//   ...
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace pushsum
