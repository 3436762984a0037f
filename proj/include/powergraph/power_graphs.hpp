// The graphs attached to a finite group: directed, undirected, proper and
// enhanced power graphs, the commuting graph and the prime graph; plus the
// quotient poset of the power preorder and its layer coloring.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powergraph/finite_group.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/number_theory.hpp"

namespace powergraph {

/// The directed power graph as a preorder: g reaches h iff h is a power of g.
class PowerRelation {
 public:
  explicit PowerRelation(FiniteGroup g) : group_(std::move(g)) {}

  std::size_t size() const noexcept { return group_.order(); }
  const FiniteGroup& group() const noexcept { return group_; }

  /// <g>, sorted.
  std::span<const FiniteGroup::element> reach(FiniteGroup::element g) const { return group_.powers_of(g); }

  bool reaches(FiniteGroup::element g, FiniteGroup::element h) const {
    const auto r = reach(g);
    return std::binary_search(r.begin(), r.end(), h);
  }

 private:
  FiniteGroup group_;
};

inline PowerRelation directed_power_relation(const FiniteGroup& g) { return PowerRelation(g); }

/// Exhaustive reflexivity and transitivity check.
inline bool is_preorder(const PowerRelation& r) {
  for (FiniteGroup::element g = 0; g < r.size(); ++g) {
    if (!r.reaches(g, g)) return false;
    for (auto h : r.reach(g)) {
      for (auto k : r.reach(h)) {
        if (!r.reaches(g, k)) return false;
      }
    }
  }
  return true;
}

/// Classes of the preorder (elements generating the same cyclic subgroup),
/// ordered by inclusion of the subgroups they generate: the identity's class
/// is the least element.
struct QuotientPoset {
  std::vector<std::vector<FiniteGroup::element>> classes;
  std::vector<std::size_t> class_of;
  /// below[c]: classes strictly below c.
  std::vector<std::vector<std::size_t>> below;
  /// above[c]: classes strictly above c.
  std::vector<std::vector<std::size_t>> above;

  bool less(std::size_t a, std::size_t b) const {
    return std::binary_search(below[b].begin(), below[b].end(), a);
  }
};

/// Throws std::logic_error if the relation is not reflexive.
inline QuotientPoset quotient_poset(const PowerRelation& r) {
  const auto& g = r.group();
  QuotientPoset q;
  const auto k = g.cyclic_class_count();
  q.classes.resize(k);
  q.below.resize(k);
  q.above.resize(k);
  q.class_of.resize(g.order());
  for (std::size_t c = 0; c < k; ++c) {
    const auto m = g.class_members(c);
    q.classes[c].assign(m.begin(), m.end());
    for (auto x : m) {
      if (!r.reaches(x, x)) throw std::logic_error("quotient_poset: relation is not reflexive");
      q.class_of[x] = c;
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    // Every cyclic subgroup of <x> is <h> for some h in <x>.
    for (auto h : r.reach(q.classes[c].front())) {
      const auto d = g.cyclic_class_of(h);
      if (d != c) q.below[c].push_back(d);
    }
    std::sort(q.below[c].begin(), q.below[c].end());
    q.below[c].erase(std::unique(q.below[c].begin(), q.below[c].end()), q.below[c].end());
    for (auto d : q.below[c]) q.above[d].push_back(c);
  }
  return q;
}

/// Heaviest chain in the quotient poset, weighting each class by its size.
/// This is the clique number of the power graph.
inline std::size_t max_chain_weight(const QuotientPoset& q) {
  const auto k = q.classes.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // A class sits strictly above all of its `below` classes, so sorting by
  // the number of classes below gives a linear extension.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return q.below[a].size() < q.below[b].size(); });
  std::vector<std::size_t> best(k, 0);
  std::size_t answer = 0;
  for (auto c : order) {
    std::size_t w = 0;
    for (auto d : q.below[c]) w = std::max(w, best[d]);
    best[c] = w + q.classes[c].size();
    answer = std::max(answer, best[c]);
  }
  return answer;
}

/// Undirected power graph: u ~ v iff u != v and one is a power of the other.
/// Vertex i is element i.
inline Graph power_graph(const FiniteGroup& g) {
  const auto n = g.order();
  const auto k = g.cyclic_class_count();
  // above[c]: classes whose subgroup strictly contains subgroup c.
  std::vector<std::vector<std::uint32_t>> above(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::uint32_t last = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> seen;
    for (auto h : g.class_subgroup(c)) {
      const auto d = static_cast<std::uint32_t>(g.cyclic_class_of(h));
      if (d != c && d != last) seen.push_back(d);
      last = d;
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto d : seen) above[d].push_back(static_cast<std::uint32_t>(c));
  }
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> degree(n, 0);
  const auto for_each_neighbor = [&](FiniteGroup::element h, auto&& fn) {
    const auto c = g.cyclic_class_of(h);
    for (auto x : g.class_subgroup(c)) {
      if (x != h) fn(x);
    }
    for (auto d : above[c]) {
      for (auto x : g.class_members(d)) fn(x);
    }
  };
  for (FiniteGroup::element h = 0; h < n; ++h) {
    for_each_neighbor(h, [&](FiniteGroup::element x) { ++degree[x]; });
  }
  for (FiniteGroup::element x = 0; x < n; ++x) adj[x].reserve(degree[x]);
  // Visiting h in increasing order leaves every list sorted.
  for (FiniteGroup::element h = 0; h < n; ++h) {
    for_each_neighbor(h, [&](FiniteGroup::element x) { adj[x].push_back(h); });
  }
  return Graph::from_sorted_adjacency_unchecked(std::move(adj));
}

/// Whether `graph` is exactly the comparability graph of the power preorder.
inline bool is_comparability_graph_of(const Graph& graph, const PowerRelation& r) {
  if (graph.vertex_count() != r.size()) return false;
  for (Vertex u = 0; u < r.size(); ++u) {
    for (Vertex v = u + 1; v < r.size(); ++v) {
      if (graph.adjacent(u, v) != (r.reaches(u, v) || r.reaches(v, u))) return false;
    }
  }
  return true;
}

/// Arcs u -> v with v a power of u, u != v; sorted.
inline std::vector<Edge> directed_power_arcs(const PowerRelation& r) {
  std::vector<Edge> arcs;
  for (FiniteGroup::element u = 0; u < r.size(); ++u) {
    for (auto v : r.reach(u)) {
      if (v != u) arcs.emplace_back(u, v);
    }
  }
  return arcs;
}

/// Power graph with the identity removed; vertex i is element i + 1.
/// Throws std::invalid_argument for the trivial group.
inline Graph proper_power_graph(const FiniteGroup& g) {
  if (g.order() < 2) throw std::invalid_argument("proper_power_graph: trivial group");
  const auto full = power_graph(g);
  std::vector<Vertex> rest(g.order() - 1);
  std::iota(rest.begin(), rest.end(), Vertex{1});
  return induced_subgraph(full, rest);
}

/// u ~ v iff u != v and both lie in one cyclic subgroup. Built as the union
/// of cliques on the maximal cyclic subgroups.
inline Graph enhanced_power_graph(const FiniteGroup& g) {
  const auto n = g.order();
  const auto q = quotient_poset(directed_power_relation(g));
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    if (!q.above[c].empty()) continue;
    const auto sub = g.powers_of(q.classes[c].front());
    for (auto x : sub) {
      for (auto y : sub) {
        if (x != y) adj[x].push_back(y);
      }
    }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return Graph::from_sorted_adjacency_unchecked(std::move(adj));
}

/// u ~ v iff u != v and uv = vu.
inline Graph commuting_graph(const FiniteGroup& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.multiply(u, v) == g.multiply(v, u)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return Graph::from_sorted_adjacency_unchecked(std::move(adj));
}

/// Gruenberg-Kegel graph: primes dividing |G|, p ~ q iff some element order is divisible by pq.
struct PrimeGraph {
  std::vector<std::uint64_t> primes;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  bool is_null() const noexcept { return edges.empty(); }

  /// Vertex i is primes[i].
  Graph as_graph() const {
    std::vector<Edge> e;
    const auto index = [&](std::uint64_t p) {
      return static_cast<Vertex>(std::lower_bound(primes.begin(), primes.end(), p) - primes.begin());
    };
    for (auto [p, q] : edges) e.emplace_back(index(p), index(q));
    return Graph::from_edges(primes.size(), e);
  }

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;
};

/// Throws std::invalid_argument for the trivial group.
inline PrimeGraph prime_graph(const FiniteGroup& g) {
  if (g.order() < 2) throw std::invalid_argument("prime_graph: trivial group");
  PrimeGraph pg;
  pg.primes = prime_divisors(g.order());
  const auto hist = order_histogram(g);
  for (std::size_t i = 0; i < pg.primes.size(); ++i) {
    for (std::size_t j = i + 1; j < pg.primes.size(); ++j) {
      const auto pq = pg.primes[i] * pg.primes[j];
      for (const auto& [o, count] : hist) {
        if (o % pq == 0) {
          pg.edges.emplace_back(pg.primes[i], pg.primes[j]);
          break;
        }
      }
    }
  }
  return pg;
}

/// Half of the sum over g of 2 o(g) - phi(o(g)) - 1.
inline std::uint64_t predicted_edge_count(const FiniteGroup& g) {
  std::uint64_t twice = 0;
  for (const auto& [o, count] : order_histogram(g)) {
    twice += count * (2 * static_cast<std::uint64_t>(o) - euler_phi(o) - 1);
  }
  return twice / 2;
}

struct ChainColoring {
  /// color[g] for every element g; colors are 0..color_count-1.
  std::vector<std::uint32_t> color;
  std::size_t color_count = 0;
  /// A chain meeting every color class; a clique of the power graph.
  std::vector<FiniteGroup::element> clique;
  std::size_t clique_size() const noexcept { return clique.size(); }
};

/// Proper coloring of the power graph by peeling minimal elements. Each
/// class is refined into a chain by element index, turning the preorder into
/// a partial order; layer i collects the minimal elements left after removing
/// layers 0..i-1 and gets color i.
inline ChainColoring chain_layer_coloring(const PowerRelation& r) {
  const auto q = quotient_poset(r);
  const auto n = r.size();
  std::vector<std::size_t> rank(n, 0);
  for (const auto& cls : q.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) rank[cls[i]] = i;
  }
  // Strict predecessors of x: lower-ranked members of its class and every
  // member of every class below.
  std::vector<std::size_t> pending(n, 0);
  for (FiniteGroup::element x = 0; x < n; ++x) {
    const auto c = q.class_of[x];
    pending[x] = rank[x];
    for (auto d : q.below[c]) pending[x] += q.classes[d].size();
  }
  ChainColoring out;
  out.color.assign(n, 0);
  std::vector<FiniteGroup::element> layer;
  for (FiniteGroup::element x = 0; x < n; ++x) {
    if (pending[x] == 0) layer.push_back(x);
  }
  std::vector<std::vector<FiniteGroup::element>> layers;
  while (!layer.empty()) {
    const auto color = static_cast<std::uint32_t>(layers.size());
    std::vector<FiniteGroup::element> next;
    const auto release = [&](FiniteGroup::element y) {
      if (--pending[y] == 0) next.push_back(y);
    };
    for (auto x : layer) {
      out.color[x] = color;
      const auto c = q.class_of[x];
      for (std::size_t i = rank[x] + 1; i < q.classes[c].size(); ++i) release(q.classes[c][i]);
      for (auto d : q.above[c]) {
        for (auto y : q.classes[d]) release(y);
      }
    }
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(layer));
    layer = std::move(next);
  }
  out.color_count = layers.size();
  // Walk down from the top layer: an element in layer i has a predecessor in layer i-1.
  if (!layers.empty()) {
    auto x = layers.back().front();
    out.clique.push_back(x);
    for (std::size_t i = layers.size() - 1; i-- > 0;) {
      for (auto y : layers[i]) {
        const auto cy = q.class_of[y], cx = q.class_of[x];
        if ((cy == cx && rank[y] < rank[x]) || q.less(cy, cx)) {
          x = y;
          break;
        }
      }
      out.clique.push_back(x);
    }
    std::reverse(out.clique.begin(), out.clique.end());
  }
  return out;
}

}  // namespace powergraph
