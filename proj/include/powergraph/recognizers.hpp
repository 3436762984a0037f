// Membership tests for cographs, chordal, split, threshold and (boundedly)
// perfect graphs. Non-members come with a forbidden induced subgraph;
// members come with a certificate where the class has one.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "powergraph/forbidden.hpp"
#include "powergraph/graph.hpp"

namespace powergraph {

/// Threshold construction: vertex order[i] is added as isolated (bits[i] == '0')
/// or dominating (bits[i] == '1'); bits[0] is always '0'.
struct CreationSequence {
  std::string bits;
  std::vector<Vertex> order;
};

/// Each vertex's neighbors later in `order` form a clique.
struct EliminationOrder {
  std::vector<Vertex> order;
};

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

using Certificate = std::variant<std::monostate, CreationSequence, EliminationOrder, SplitPartition>;

enum class GraphClass { cograph, chordal, split, threshold, perfect_bounded };

inline std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::cograph:
      return "cograph";
    case GraphClass::chordal:
      return "chordal";
    case GraphClass::split:
      return "split";
    case GraphClass::threshold:
      return "threshold";
    case GraphClass::perfect_bounded:
      return "perfect";
  }
  return {};
}

struct ClassVerdict {
  GraphClass graph_class = GraphClass::cograph;
  bool member = false;
  std::optional<Witness> witness;
  Certificate certificate;
  /// Longest odd hole/antihole length searched; perfect_bounded only.
  std::size_t bound = 0;
};

// ---------------------------------------------------------------------------
// Certificates

/// Replays the sequence and compares with g under the recorded vertex order.
inline bool creation_sequence_holds(const Graph& g, const CreationSequence& cs) {
  const auto n = g.vertex_count();
  if (cs.bits.size() != n || cs.order.size() != n) return false;
  if (n > 0 && cs.bits[0] != '0') return false;
  std::vector<bool> seen(n, false);
  for (auto v : cs.order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (cs.bits[i] != '0' && cs.bits[i] != '1') return false;
    if (cs.bits[i] == '1') {
      for (std::size_t j = 0; j < i; ++j) edges.emplace_back(cs.order[j], cs.order[i]);
    }
  }
  return Graph::from_edges(n, edges) == g;
}

/// Checks every later-neighborhood pairwise; quadratic in degrees.
inline bool elimination_order_holds(const Graph& g, const EliminationOrder& peo) {
  const auto n = g.vertex_count();
  if (peo.order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (peo.order[i] >= n || pos[peo.order[i]] != n) return false;
    pos[peo.order[i]] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    for (auto w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

inline bool split_partition_holds(const Graph& g, const SplitPartition& sp) {
  const auto n = g.vertex_count();
  if (sp.clique.size() + sp.independent.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto* part : {&sp.clique, &sp.independent}) {
    for (auto v : *part) {
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
  }
  for (std::size_t i = 0; i < sp.clique.size(); ++i)
    for (std::size_t j = i + 1; j < sp.clique.size(); ++j)
      if (!g.adjacent(sp.clique[i], sp.clique[j])) return false;
  for (std::size_t i = 0; i < sp.independent.size(); ++i)
    for (std::size_t j = i + 1; j < sp.independent.size(); ++j)
      if (g.adjacent(sp.independent[i], sp.independent[j])) return false;
  return true;
}

/// member == false needs a holding witness; member == true needs a holding
/// certificate for the classes that carry one.
inline bool verdict_holds(const Graph& g, const ClassVerdict& v) {
  if (!v.member) return v.witness && witness_holds(g, *v.witness);
  if (const auto* cs = std::get_if<CreationSequence>(&v.certificate)) return creation_sequence_holds(g, *cs);
  if (const auto* peo = std::get_if<EliminationOrder>(&v.certificate)) return elimination_order_holds(g, *peo);
  if (const auto* sp = std::get_if<SplitPartition>(&v.certificate)) return split_partition_holds(g, *sp);
  return v.graph_class == GraphClass::cograph || v.graph_class == GraphClass::perfect_bounded;
}

// ---------------------------------------------------------------------------
// Cographs

inline ClassVerdict is_cograph(const Graph& g) {
  ClassVerdict v{GraphClass::cograph, true, find_forbidden(g, Pattern::p4()), {}, 0};
  v.member = !v.witness;
  return v;
}

// ---------------------------------------------------------------------------
// Chordal graphs

/// Lexicographic breadth-first search; ties go to the smallest vertex index.
/// Returns vertices in visiting order.
inline std::vector<Vertex> lex_bfs(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<Vertex>> cells;
  if (n > 0) {
    cells.emplace_back(n);
    std::iota(cells.front().begin(), cells.front().end(), Vertex{0});
  }
  std::vector<Vertex> visit;
  visit.reserve(n);
  std::vector<std::vector<Vertex>> next;
  while (!cells.empty()) {
    const auto v = cells.front().front();
    cells.front().erase(cells.front().begin());
    visit.push_back(v);
    next.clear();
    for (auto& cell : cells) {
      std::vector<Vertex> in, out;
      for (auto w : cell) (g.adjacent(v, w) ? in : out).push_back(w);
      if (!in.empty()) next.push_back(std::move(in));
      if (!out.empty()) next.push_back(std::move(out));
    }
    std::swap(cells, next);
  }
  return visit;
}

namespace detail {

// Shortest x-y path avoiding the closed neighborhood of `center` (x and y
// excepted), closed into the cycle center, x, ..., y.
inline std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex center, Vertex x, Vertex y) {
  const auto n = g.vertex_count();
  constexpr auto none = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(n, none);
  std::vector<bool> blocked(n, false);
  blocked[center] = true;
  for (auto w : g.neighbors(center)) blocked[w] = true;
  blocked[x] = blocked[y] = false;
  std::deque<Vertex> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    if (u == y) break;
    for (auto w : g.neighbors(u)) {
      if (blocked[w] || parent[w] != none || w == center) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[y] == none) return std::nullopt;
  std::vector<Vertex> path;
  for (auto u = y; u != x; u = parent[u]) path.push_back(u);
  path.push_back(x);
  std::reverse(path.begin(), path.end());
  path.insert(path.begin(), center);
  return path;
}

}  // namespace detail

/// Some induced cycle of length >= 4, if any; exhaustive over centers.
inline std::optional<Witness> find_chordless_cycle(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto cyc = detail::hole_through(g, v, nb[i], nb[j])) {
          return Witness{Pattern::hole(cyc->size()), std::move(*cyc), {}};
        }
      }
    }
  }
  return std::nullopt;
}

/// Perfect elimination order from the reverse LexBFS order, verified by the
/// parent test; on failure, a chordless cycle through the failing vertex and
/// its two non-adjacent earlier neighbors.
inline ClassVerdict is_chordal(const Graph& g) {
  const auto n = g.vertex_count();
  const auto visit = lex_bfs(g);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[visit[i]] = i;
  ClassVerdict out{GraphClass::chordal, true, std::nullopt, {}, 0};
  for (auto v : visit) {
    Vertex parent = v;
    std::vector<Vertex> earlier;
    for (auto w : g.neighbors(v)) {
      if (pos[w] < pos[v]) {
        earlier.push_back(w);
        if (parent == v || pos[w] > pos[parent]) parent = w;
      }
    }
    for (auto w : earlier) {
      if (w == parent || g.adjacent(parent, w)) continue;
      out.member = false;
      if (auto cyc = detail::hole_through(g, v, parent, w)) {
        out.witness = Witness{Pattern::hole(cyc->size()), std::move(*cyc), {}};
      } else {
        out.witness = find_chordless_cycle(g);
      }
      if (!out.witness) throw std::logic_error("is_chordal: elimination failed but no hole found");
      return out;
    }
  }
  out.certificate = EliminationOrder{{visit.rbegin(), visit.rend()}};
  return out;
}

// ---------------------------------------------------------------------------
// Split graphs

/// Degree-sequence test: with degrees sorted non-increasing and m the largest
/// i with d_i >= i - 1, g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
/// On success the m highest-degree vertices (ties by index) form the clique.
inline std::optional<SplitPartition> split_partition_from_degrees(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (g.degree(by_degree[i - 1]) + 1 >= i) m = i;
  }
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(by_degree[i]);
  if (head != m * (m > 0 ? m - 1 : 0) + tail) return std::nullopt;
  SplitPartition sp;
  sp.clique.assign(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(m));
  sp.independent.assign(by_degree.begin() + static_cast<std::ptrdiff_t>(m), by_degree.end());
  std::sort(sp.clique.begin(), sp.clique.end());
  std::sort(sp.independent.begin(), sp.independent.end());
  return sp;
}

/// Forbidden C4, C5, 2K2 (searched in that order), cross-checked against the
/// degree-sequence test. Throws std::logic_error if the two disagree.
inline ClassVerdict is_split(const Graph& g) {
  ClassVerdict out{GraphClass::split, true, std::nullopt, {}, 0};
  for (auto p : {Pattern::c4(), Pattern::c5(), Pattern::two_k2()}) {
    if ((out.witness = find_forbidden(g, p))) break;
  }
  out.member = !out.witness;
  auto sp = split_partition_from_degrees(g);
  if (out.member != sp.has_value() || (sp && !split_partition_holds(g, *sp))) {
    throw std::logic_error("is_split: forbidden-subgraph and degree-sequence tests disagree");
  }
  if (sp) out.certificate = std::move(*sp);
  return out;
}

// ---------------------------------------------------------------------------
// Threshold graphs

struct ThresholdResult {
  std::optional<CreationSequence> sequence;
  /// P4, C4 or 2K2 when the peeling gets stuck.
  std::optional<Witness> witness;
};

/// Peels dominating vertices (preferred) or isolated vertices, smallest index
/// first, and reverses the peel into a creation sequence.
inline ThresholdResult threshold_sequence(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> alive(n, true);
  std::string bits;
  std::vector<Vertex> order;
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    std::optional<Vertex> pick;
    char bit = '0';
    for (Vertex v = 0; v < n && !pick; ++v) {
      if (alive[v] && deg[v] + 1 == remaining) {
        pick = v;
        bit = '1';
      }
    }
    for (Vertex v = 0; v < n && !pick; ++v) {
      if (alive[v] && deg[v] == 0) pick = v;
    }
    if (!pick) {
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) rest.push_back(v);
      }
      const auto h = induced_subgraph(g, rest);
      ThresholdResult r;
      for (auto p : {Pattern::p4(), Pattern::c4(), Pattern::two_k2()}) {
        if (auto w = find_forbidden(h, p)) {
          for (auto& x : w->vertices) x = rest[x];
          r.witness = std::move(w);
          return r;
        }
      }
      throw std::logic_error("threshold_sequence: stuck without a forbidden subgraph");
    }
    if (remaining == 1) bit = '0';
    alive[*pick] = false;
    for (auto w : g.neighbors(*pick)) --deg[w];
    bits.push_back(bit);
    order.push_back(*pick);
  }
  std::reverse(bits.begin(), bits.end());
  std::reverse(order.begin(), order.end());
  return {CreationSequence{std::move(bits), std::move(order)}, std::nullopt};
}

inline ClassVerdict is_threshold(const Graph& g) {
  auto r = threshold_sequence(g);
  ClassVerdict out{GraphClass::threshold, r.sequence.has_value(), std::move(r.witness), {}, 0};
  if (r.sequence) out.certificate = std::move(*r.sequence);
  return out;
}

// ---------------------------------------------------------------------------
// Perfect graphs, up to a hole length

/// Membership only means no odd hole or antihole of length <= max_len.
inline ClassVerdict is_perfect_bounded(const Graph& g, std::size_t max_len) {
  ClassVerdict out{GraphClass::perfect_bounded, true, std::nullopt, {}, max_len};
  out.witness = find_odd_hole_or_antihole(g, max_len, false);
  if (!out.witness) out.witness = find_odd_hole_or_antihole(g, max_len, true);
  out.member = !out.witness;
  return out;
}

}  // namespace powergraph
