// Predicted-vs-actual checks of the classification theorems over the catalog.
#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powergraph/catalog.hpp"
#include "powergraph/finite_group.hpp"
#include "powergraph/forbidden.hpp"
#include "powergraph/power_graphs.hpp"
#include "powergraph/recognizers.hpp"
#include "powergraph/theorems.hpp"

namespace powergraph {

enum class TheoremId {
  complete_iff,
  perfect,
  nilpotent_cograph,
  null_gk_cograph,
  pgroup_chordal,
  nilpotent_chordal,
  lemma_pp,
  lemma_p2,
  threshold_split,
  edge_formula,
  eulerian_odd,
  gk_psl2_shape,
};

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  std::string_view description;
};

inline constexpr std::array<TheoremInfo, 12> theorem_registry{{
    {TheoremId::complete_iff, "complete-iff", "P(G) is complete iff G is cyclic of prime power order"},
    {TheoremId::perfect, "perfect",
     "P(G) has no odd hole or antihole (length <= 9 up to order 30, <= 7 up to order 60) and its "
     "chain-layer coloring uses exactly clique-number colors"},
    {TheoremId::nilpotent_cograph, "nilpotent-cograph",
     "nilpotent G: P(G) is a cograph iff |G| is a prime power or G is cyclic of order pq"},
    {TheoremId::null_gk_cograph, "null-gk-cograph", "prime graph of G has no edges => P(G) is a cograph"},
    {TheoremId::pgroup_chordal, "pgroup-chordal", "G a p-group => P(G) is chordal"},
    {TheoremId::nilpotent_chordal, "nilpotent-chordal",
     "nilpotent G: P(G) is chordal iff |G| is a prime power, or two primes with one Sylow subgroup cyclic "
     "and the other of prime exponent"},
    {TheoremId::lemma_pp, "lemma-pp",
     "for every prime p, the p-power-order elements induce no P4 and no C4 in P(G)"},
    {TheoremId::lemma_p2, "lemma-p2",
     "G a p-group: P(G) minus identity is P3-free iff G is cyclic or of exponent p"},
    {TheoremId::threshold_split, "threshold-split",
     "threshold, split, 2K2-free, intersection condition and the dihedral/cyclic list agree"},
    {TheoremId::edge_formula, "edge-formula", "|E(P(G))| = 1/2 sum over g of (2 o(g) - phi(o(g)) - 1)"},
    {TheoremId::eulerian_odd, "eulerian-odd", "P(G) is Eulerian iff |G| is odd"},
    {TheoremId::gk_psl2_shape, "gk-psl2-shape",
     "prime graph of PSL(2,q) is the union of cliques on the prime divisors of q, (q-1)/d and (q+1)/d"},
}};

inline std::string_view theorem_name(TheoremId id) {
  for (const auto& t : theorem_registry) {
    if (t.id == id) return t.name;
  }
  return {};
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (const auto& t : theorem_registry) {
    if (t.name == name) return t.id;
  }
  return std::nullopt;
}

struct GroupCheck {
  std::string group;
  std::uint64_t order = 0;
  bool predicted = false;
  bool actual = false;
  std::string details;
  std::optional<Witness> witness;
};

struct HarnessReport {
  TheoremId id = TheoremId::complete_iff;
  std::uint64_t max_order = 0;
  std::vector<GroupCheck> checks;
  double wall_time_ms = 0;

  std::vector<const GroupCheck*> counterexamples() const {
    std::vector<const GroupCheck*> out;
    for (const auto& c : checks) {
      if (c.predicted != c.actual) out.push_back(&c);
    }
    return out;
  }
  bool passed() const { return counterexamples().empty(); }
};

namespace detail {

inline Witness labelled(const FiniteGroup& g, Witness w) {
  w.labels.clear();
  for (auto v : w.vertices) w.labels.push_back(g.label(v));
  return w;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline bool prime_power_order(std::uint64_t n) { return n == 1 || is_prime_power(n).has_value(); }

inline bool coloring_matches_clique(const Graph& pg, const PowerRelation& r, std::string& details) {
  const auto col = chain_layer_coloring(r);
  for (auto [u, v] : pg.edges()) {
    if (col.color[u] == col.color[v]) {
      details = "coloring not proper";
      return false;
    }
  }
  for (std::size_t i = 0; i < col.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < col.clique.size(); ++j) {
      if (!pg.adjacent(col.clique[i], col.clique[j])) {
        details = "clique is not a clique";
        return false;
      }
    }
  }
  const auto chain = max_chain_weight(quotient_poset(r));
  details = "colors=" + std::to_string(col.color_count) + " clique=" + std::to_string(col.clique_size()) +
            " chain=" + std::to_string(chain);
  return col.color_count == chain && col.clique_size() == chain;
}

inline std::vector<std::vector<std::uint64_t>> psl2_expected_gk(std::uint64_t q) {
  const std::uint64_t d = q % 2 == 0 ? 1 : 2;
  std::vector<std::vector<std::uint64_t>> cliques;
  for (auto t : {q, (q - 1) / d, (q + 1) / d}) {
    if (t > 1) cliques.push_back(prime_divisors(t));
  }
  return cliques;
}

}  // namespace detail

/// Edge set of the expected prime graph of PSL(2, q) as prime pairs (p < r).
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> psl2_three_clique_edges(std::uint64_t q) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& c : detail::psl2_expected_gk(q)) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) out.emplace_back(c[i], c[j]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_graph_edges(const PrimeGraph& pg) {
  auto out = pg.edges;
  std::sort(out.begin(), out.end());
  return out;
}

/// The five equivalent conditions on a power graph P(G) and its group.
struct TwoK2Verdicts {
  bool threshold = false, split = false, two_k2_free = false, intersection = false, predicted = false;
  bool agree() const {
    return threshold == split && split == two_k2_free && two_k2_free == intersection && intersection == predicted;
  }
};

inline TwoK2Verdicts two_k2_verdicts(const FiniteGroup& g, const Graph& pg) {
  TwoK2Verdicts v;
  v.threshold = is_threshold(pg).member;
  v.split = is_split(pg).member;
  v.two_k2_free = !find_forbidden(pg, Pattern::two_k2());
  v.intersection = intersection_condition(g).holds;
  v.predicted = predicted_2k2free(g);
  return v;
}

/// Runs one theorem over the catalog slice of order <= max_order, one group
/// at a time. Groups above `cap` are skipped.
inline HarnessReport verify_theorem(TheoremId id, std::uint64_t max_order, std::uint64_t cap = default_order_cap) {
  const auto start = std::chrono::steady_clock::now();
  HarnessReport report;
  report.id = id;
  report.max_order = max_order;
  for (const auto& entry : catalog(std::min(max_order, cap))) {
    const auto fam = entry.spec.family;
    const bool p_order = detail::prime_power_order(entry.order);
    // Cheap slice filters before building the group.
    if ((id == TheoremId::pgroup_chordal || id == TheoremId::lemma_p2) && (!p_order || entry.order == 1)) continue;
    if (id == TheoremId::gk_psl2_shape && fam != Family::psl2) continue;
    const auto g = build_group(entry.spec, cap);
    if ((id == TheoremId::nilpotent_cograph || id == TheoremId::nilpotent_chordal) && !is_nilpotent(g)) continue;
    GroupCheck c{entry.name, entry.order, true, true, {}, std::nullopt};
    switch (id) {
      case TheoremId::complete_iff: {
        c.predicted = is_cyclic(g) && p_order;
        c.actual = is_complete(power_graph(g));
        break;
      }
      case TheoremId::perfect: {
        const auto pg = power_graph(g);
        const std::size_t bound = entry.order <= 30 ? 9 : entry.order <= 60 ? 7 : 0;
        if (bound > 0) {
          auto v = is_perfect_bounded(pg, bound);
          if (!v.member) {
            c.actual = false;
            c.witness = detail::labelled(g, *v.witness);
            c.details = "odd hole/antihole " + v.witness->pattern.name();
            break;
          }
        }
        c.actual = detail::coloring_matches_clique(pg, directed_power_relation(g), c.details);
        if (bound > 0) c.details += " holes<=" + std::to_string(bound);
        break;
      }
      case TheoremId::nilpotent_cograph: {
        c.predicted = predicted_cograph_nilpotent(g);
        auto v = is_cograph(power_graph(g));
        c.actual = v.member;
        if (v.witness) c.witness = detail::labelled(g, *v.witness);
        break;
      }
      case TheoremId::null_gk_cograph: {
        if (entry.order == 1 || !prime_graph(g).is_null()) continue;
        auto v = is_cograph(power_graph(g));
        c.actual = v.member;
        if (v.witness) c.witness = detail::labelled(g, *v.witness);
        break;
      }
      case TheoremId::pgroup_chordal:
      case TheoremId::nilpotent_chordal: {
        if (id == TheoremId::nilpotent_chordal) c.predicted = predicted_chordal_nilpotent(g);
        auto v = is_chordal(power_graph(g));
        c.actual = v.member;
        if (v.witness) c.witness = detail::labelled(g, *v.witness);
        break;
      }
      case TheoremId::lemma_pp: {
        if (entry.order == 1) continue;
        const auto pg = power_graph(g);
        std::string failed;
        for (auto p : prime_divisors(entry.order)) {
          if (!lemma_pp_check(g, pg, p)) failed += (failed.empty() ? "" : ",") + std::to_string(p);
        }
        c.actual = failed.empty();
        if (!failed.empty()) c.details = "fails for p=" + failed;
        break;
      }
      case TheoremId::lemma_p2: {
        auto s = lemma_p2_sides(g);
        c.predicted = s.cyclic_or_prime_exponent;
        c.actual = s.p3_free_off_identity;
        if (s.witness) c.witness = detail::labelled(g, *s.witness);
        break;
      }
      case TheoremId::threshold_split: {
        const auto v = two_k2_verdicts(g, power_graph(g));
        c.actual = v.agree();
        c.details = "threshold=" + detail::yes_no(v.threshold) + " split=" + detail::yes_no(v.split) +
                    " 2k2free=" + detail::yes_no(v.two_k2_free) + " ic=" + detail::yes_no(v.intersection) +
                    " predicted=" + detail::yes_no(v.predicted);
        break;
      }
      case TheoremId::edge_formula: {
        const auto actual = power_graph(g).edge_count();
        const auto predicted = predicted_edge_count(g);
        c.actual = actual == predicted;
        c.details = "edges=" + std::to_string(actual) + " formula=" + std::to_string(predicted);
        break;
      }
      case TheoremId::eulerian_odd: {
        c.predicted = entry.order % 2 == 1;
        c.actual = is_eulerian(power_graph(g));
        break;
      }
      case TheoremId::gk_psl2_shape: {
        const auto expected = psl2_three_clique_edges(entry.spec.n);
        const auto actual = prime_graph_edges(prime_graph(g));
        c.actual = expected == actual;
        std::ostringstream os;
        os << "edges=" << actual.size() << " expected=" << expected.size();
        c.details = os.str();
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace powergraph
