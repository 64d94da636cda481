#include "pushsum/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "pushsum/error.hpp"

namespace pushsum {

namespace {

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> frontier;
  seen[static_cast<std::size_t>(source)] = true;
  frontier.push(source);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        frontier.push(u);
      }
    }
  }
  return seen;
}

bool all_true(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

Graph::Graph(std::size_t n, bool directed, std::vector<Edge> edges)
    : n_(n), directed_(directed), edges_(std::move(edges)), adjacency_(n) {
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorKind::InvalidGraph, "edge (" + std::to_string(u) + ", " +
                                               std::to_string(v) + ") out of range for n = " +
                                               std::to_string(n));
    }
    if (!directed && u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::InvalidGraph, "duplicate edge (" + std::to_string(dup->first) + ", " +
                                             std::to_string(dup->second) + ")");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    if (!directed && u != v) adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = adjacency_[v].size();
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : adjacency_[0].size();
  for (const auto& row : adjacency_) best = std::min(best, row.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || static_cast<std::size_t>(u) >= n_) return false;
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  if (!all_true(reachable_from(adjacency_, 0))) return false;
  if (!directed_) return true;
  std::vector<std::vector<int>> reversed(n_);
  for (const auto& [u, v] : edges_) reversed[static_cast<std::size_t>(v)].push_back(u);
  return all_true(reachable_from(reversed, 0));
}

void write_graph(std::ostream& os, const Graph& g) {
  os << "n " << g.n() << " directed " << (g.directed() ? 1 : 0) << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::Parse, "empty graph file");
  std::istringstream header(line);
  std::string n_tag, directed_tag;
  long long n = -1;
  int directed = -1;
  if (!(header >> n_tag >> n >> directed_tag >> directed) || n_tag != "n" ||
      directed_tag != "directed" || n < 0 || (directed != 0 && directed != 1)) {
    throw Error(ErrorKind::Parse, "bad header line: '" + line + "'");
  }
  std::vector<Edge> edges;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string trailing;
    if (!(row >> u >> v) || (row >> trailing)) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<std::size_t>(n), directed == 1, std::move(edges));
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "' for writing");
  write_graph(out, g);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  return read_graph(in);
}

}  // namespace pushsum
