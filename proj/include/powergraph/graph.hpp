// Simple undirected graphs over vertices 0..n-1.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace powergraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Graphs up to this many vertices keep a dense adjacency matrix for O(1) lookups.
inline constexpr std::size_t dense_vertex_limit = 4096;

class Graph {
 public:
  Graph() = default;

  /// Null graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n) { init_dense(); }

  /// Throws std::invalid_argument on loops or out-of-range endpoints; duplicates are merged.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return Graph(std::move(adj), trusted{});
  }

  /// Takes per-vertex neighbor lists; validates symmetry, loops and duplicates.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj) {
    const auto n = adj.size();
    for (Vertex u = 0; u < n; ++u) {
      auto& a = adj[u];
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
        throw std::invalid_argument("Graph: duplicate neighbor");
      }
      for (auto v : a) {
        if (v >= n) throw std::invalid_argument("Graph: neighbor out of range");
        if (v == u) throw std::invalid_argument("Graph: loops are not allowed");
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      for (auto v : adj[u]) {
        if (!std::binary_search(adj[v].begin(), adj[v].end(), u)) {
          throw std::invalid_argument("Graph: adjacency is not symmetric");
        }
      }
    }
    return Graph(std::move(adj), trusted{});
  }

  /// Neighbor lists must already be sorted, symmetric and loop-free.
  static Graph from_sorted_adjacency_unchecked(std::vector<std::vector<Vertex>> adj) {
    return Graph(std::move(adj), trusted{});
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    if (dense_) {
      std::call_once(dense_->once, [this] { build_dense(); });
      return dense_->rows[u].test(v);
    }
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// Row of the dense adjacency matrix, or nullptr above dense_vertex_limit.
  const boost::dynamic_bitset<>* adjacency_row(Vertex v) const {
    if (!dense_) return nullptr;
    std::call_once(dense_->once, [this] { build_dense(); });
    return &dense_->rows.at(v);
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (auto v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  struct trusted {};

  Graph(std::vector<std::vector<Vertex>> adj, trusted) : adj_(std::move(adj)) {
    std::size_t deg = 0;
    for (const auto& a : adj_) deg += a.size();
    edge_count_ = deg / 2;
    init_dense();
  }

  // Built on the first adjacency query.
  struct Dense {
    std::once_flag once;
    std::vector<boost::dynamic_bitset<>> rows;
  };

  void init_dense() {
    if (adj_.size() <= dense_vertex_limit) dense_ = std::make_shared<Dense>();
  }

  void build_dense() const {
    dense_->rows.assign(adj_.size(), boost::dynamic_bitset<>(adj_.size()));
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (auto v : adj_[u]) dense_->rows[u].set(v);
    }
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  std::shared_ptr<Dense> dense_;
};

inline Graph complete_graph(std::size_t n) {
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) adj[u].push_back(v);
    }
  }
  return Graph::from_sorted_adjacency_unchecked(std::move(adj));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

/// Vertex 0 joined to 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

/// Vertex i of the result is S[i]. Throws std::out_of_range for bad vertices.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<std::vector<Vertex>> adj(subset.size());
  for (auto v : subset) {
    if (v >= g.vertex_count()) throw std::out_of_range("induced_subgraph: vertex out of range");
  }
  for (Vertex i = 0; i < subset.size(); ++i) {
    for (Vertex j = 0; j < subset.size(); ++j) {
      if (i != j && g.adjacent(subset[i], subset[j])) adj[i].push_back(j);
    }
  }
  return Graph::from_sorted_adjacency_unchecked(std::move(adj));
}

inline Graph complement(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    std::size_t k = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (k < nb.size() && nb[k] == v) {
        ++k;
        continue;
      }
      if (v != u) adj[u].push_back(v);
    }
  }
  return Graph::from_sorted_adjacency_unchecked(std::move(adj));
}

/// Degrees sorted non-increasing.
inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

inline bool is_connected(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

/// Connected with every degree even.
inline bool is_eulerian(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return is_connected(g);
}

inline bool is_complete(const Graph& g) {
  const auto n = g.vertex_count();
  return n == 0 || g.edge_count() == n * (n - 1) / 2;
}

// ---------------------------------------------------------------------------
// Text formats

/// One "u v" line per edge, u < v, sorted.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

/// Parses "u v" lines; blank lines are skipped. The vertex count defaults to
/// one more than the largest endpoint.
inline Graph read_edge_list(std::istream& is, std::size_t vertex_count = 0) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t n = vertex_count;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0) {
      throw std::invalid_argument("read_edge_list: malformed line '" + line + "'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  return Graph::from_edges(n, edges);
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Undirected DOT with one labeled node per vertex in index order.
inline void write_dot(std::ostream& os, const Graph& g, const std::string& name,
                      const std::function<std::string(Vertex)>& label = {}) {
  os << "graph \"" << dot_escape(name) << "\" {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << dot_escape(label ? label(v) : std::to_string(v)) << "\"];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

}  // namespace powergraph
