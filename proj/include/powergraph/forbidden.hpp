// Exhaustive search for small forbidden induced subgraphs.
//
// A witness lists the vertices realizing a pattern in pattern order: path
// vertices along the path, cycle vertices around the cycle, 2K2 as the two
// edges (v0 v1) and (v2 v3), antihole vertices around the complementary cycle.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "powergraph/graph.hpp"

namespace powergraph {

enum class PatternKind { path, cycle, two_k2, antihole };

struct Pattern {
  PatternKind kind = PatternKind::path;
  std::size_t size = 0;

  static Pattern p3() { return {PatternKind::path, 3}; }
  static Pattern p4() { return {PatternKind::path, 4}; }
  static Pattern c4() { return {PatternKind::cycle, 4}; }
  static Pattern c5() { return {PatternKind::cycle, 5}; }
  static Pattern two_k2() { return {PatternKind::two_k2, 4}; }
  static Pattern hole(std::size_t k) { return {PatternKind::cycle, k}; }
  static Pattern antihole(std::size_t k) { return {PatternKind::antihole, k}; }

  /// Whether pattern positions i and j (i != j) are adjacent.
  bool adjacent(std::size_t i, std::size_t j) const {
    const auto d = i > j ? i - j : j - i;
    switch (kind) {
      case PatternKind::path:
        return d == 1;
      case PatternKind::cycle:
        return d == 1 || d == size - 1;
      case PatternKind::two_k2:
        return std::min(i, j) % 2 == 0 && d == 1;
      case PatternKind::antihole:
        return d != 1 && d != size - 1;
    }
    return false;
  }

  std::string name() const {
    switch (kind) {
      case PatternKind::path:
        return "P" + std::to_string(size);
      case PatternKind::cycle:
        return "C" + std::to_string(size);
      case PatternKind::two_k2:
        return "2K2";
      case PatternKind::antihole:
        return "antiC" + std::to_string(size);
    }
    return {};
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Witness {
  Pattern pattern;
  std::vector<Vertex> vertices;
  /// Element labels, filled in when the graph came from a group.
  std::vector<std::string> labels;
};

/// Whether the witness vertices induce exactly its pattern in g, in order.
inline bool witness_holds(const Graph& g, const Witness& w) {
  const auto& vs = w.vertices;
  if (vs.size() != w.pattern.size) return false;
  for (auto v : vs) {
    if (v >= g.vertex_count()) return false;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return false;
      if (g.adjacent(vs[i], vs[j]) != w.pattern.adjacent(i, j)) return false;
    }
  }
  return true;
}

namespace detail {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, Pattern pattern) : g_(g), pattern_(pattern), chosen_(pattern.size) {
    const auto k = pattern.size;
    anchor_.assign(k, -1);
    need_deg_.assign(k, 0);
    need_nondeg_.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        if (pattern.adjacent(i, j)) {
          ++need_deg_[i];
          if (j < i && anchor_[i] < 0) anchor_[i] = static_cast<int>(j);
        } else {
          ++need_nondeg_[i];
        }
      }
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (g_.vertex_count() < pattern_.size) return std::nullopt;
    if (g_.vertex_count() > 0 && g_.adjacency_row(0)) {
      candidates_.assign(pattern_.size, boost::dynamic_bitset<>(g_.vertex_count()));
      candidates_[0].set();
      if (extend_dense(0)) return chosen_;
      return std::nullopt;
    }
    if (extend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool fits(std::size_t i, Vertex w) const {
    const auto deg = g_.degree(w);
    if (deg < need_deg_[i] || g_.vertex_count() - 1 - deg < need_nondeg_[i]) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (chosen_[j] == w) return false;
      if (g_.adjacent(chosen_[j], w) != pattern_.adjacent(i, j)) return false;
    }
    return true;
  }

  // Candidates are tried in ascending order, so the first embedding found is
  // the lexicographically least vertex tuple.
  bool extend_dense(std::size_t i) {
    if (i == pattern_.size) return true;
    const auto& cand = candidates_[i];
    for (auto w = cand.find_first(); w != boost::dynamic_bitset<>::npos; w = cand.find_next(w)) {
      const auto v = static_cast<Vertex>(w);
      const auto deg = g_.degree(v);
      if (deg < need_deg_[i] || g_.vertex_count() - 1 - deg < need_nondeg_[i]) continue;
      chosen_[i] = v;
      if (i + 1 < pattern_.size && !restrict_level(i + 1)) continue;
      if (extend_dense(i + 1)) return true;
    }
    return false;
  }

  // Candidates for `level` given chosen_[0..level-1]; false if none remain.
  bool restrict_level(std::size_t level) {
    auto& next = candidates_[level];
    next.set();
    for (std::size_t j = 0; j < level; ++j) {
      next.reset(chosen_[j]);
      if (pattern_.adjacent(level, j)) {
        next &= *g_.adjacency_row(chosen_[j]);
      } else {
        next -= *g_.adjacency_row(chosen_[j]);
      }
    }
    return next.any();
  }

  bool extend(std::size_t i) {
    if (i == pattern_.size) return true;
    const auto try_vertex = [&](Vertex w) {
      if (!fits(i, w)) return false;
      chosen_[i] = w;
      return extend(i + 1);
    };
    if (anchor_[i] >= 0) {
      for (auto w : g_.neighbors(chosen_[static_cast<std::size_t>(anchor_[i])])) {
        if (try_vertex(w)) return true;
      }
    } else {
      for (Vertex w = 0; w < g_.vertex_count(); ++w) {
        if (try_vertex(w)) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  Pattern pattern_;
  std::vector<Vertex> chosen_;
  std::vector<int> anchor_;
  std::vector<std::size_t> need_deg_, need_nondeg_;
  std::vector<boost::dynamic_bitset<>> candidates_;
};

// Chordless cycles of exactly `len` vertices whose least vertex comes first.
// With `anti`, works in the complement of g without materializing it.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, bool anti) : g_(g), anti_(anti) {}

  std::optional<std::vector<Vertex>> find(std::size_t len) {
    len_ = len;
    const auto n = static_cast<Vertex>(g_.vertex_count());
    if (n < len) return std::nullopt;
    path_.assign(1, 0);
    for (Vertex s = 0; s + len <= n; ++s) {
      path_[0] = s;
      if (extend()) return path_;
    }
    return std::nullopt;
  }

 private:
  bool adj(Vertex u, Vertex v) const { return u != v && (g_.adjacent(u, v) != anti_); }

  bool extend() {
    const auto j = path_.size();
    const auto last = path_.back();
    const auto s = path_.front();
    const bool closing = j + 1 == len_;
    const auto consider = [&](Vertex w) {
      if (w <= s) return false;
      if (closing && !adj(w, s)) return false;
      if (!closing && j >= 2 && adj(w, s)) return false;
      for (std::size_t i = 1; i + 1 < j; ++i) {
        if (adj(w, path_[i]) || w == path_[i]) return false;
      }
      path_.push_back(w);
      if (closing || extend()) return true;
      path_.pop_back();
      return false;
    };
    if (!anti_) {
      for (auto w : g_.neighbors(last)) {
        if (consider(w)) return true;
      }
    } else {
      for (Vertex w = s + 1; w < g_.vertex_count(); ++w) {
        if (w != last && !g_.adjacent(last, w) && consider(w)) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  bool anti_;
  std::size_t len_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace detail

/// Lexicographically least embedding of `pattern` as an induced subgraph, if any.
inline std::optional<Witness> find_forbidden(const Graph& g, Pattern pattern) {
  if (pattern.size == 0) throw std::invalid_argument("find_forbidden: empty pattern");
  detail::EmbeddingSearch search(g, pattern);
  auto found = search.run();
  if (!found) return std::nullopt;
  return Witness{pattern, std::move(*found), {}};
}

/// An induced odd hole (or, with `anti`, odd antihole) of length 5..max_len.
/// Shorter lengths are tried first; within a length the tuple starting at
/// the cycle's least vertex is lexicographically least.
inline std::optional<Witness> find_odd_hole_or_antihole(const Graph& g, std::size_t max_len, bool anti) {
  if (max_len < 5 || max_len % 2 == 0) {
    throw std::invalid_argument("find_odd_hole_or_antihole: max_len must be odd and at least 5");
  }
  detail::HoleSearch search(g, anti);
  for (std::size_t len = 5; len <= max_len; len += 2) {
    if (auto cyc = search.find(len)) {
      return Witness{anti ? Pattern::antihole(len) : Pattern::hole(len), std::move(*cyc), {}};
    }
  }
  return std::nullopt;
}

}  // namespace powergraph
