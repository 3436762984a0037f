// JSON serialization of group reports, graphs and harness results.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "powergraph/finite_group.hpp"
#include "powergraph/forbidden.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/harness.hpp"
#include "powergraph/power_graphs.hpp"
#include "powergraph/recognizers.hpp"
#include "powergraph/theorems.hpp"

namespace powergraph {

inline constexpr std::string_view tool_version = "0.1.0";

/// Commuting graphs are only built up to this order in reports.
inline constexpr std::size_t commuting_report_limit = 2000;

using json = nlohmann::ordered_json;

inline json witness_json(const Witness& w, const FiniteGroup* g = nullptr) {
  json j{{"pattern", w.pattern.name()}, {"vertices", w.vertices}};
  if (g) {
    json labels = json::array(), orders = json::array();
    for (auto v : w.vertices) {
      labels.push_back(g->label(v));
      orders.push_back(g->element_order(v));
    }
    j["labels"] = labels;
    j["orders"] = orders;
  } else if (!w.labels.empty()) {
    j["labels"] = w.labels;
  }
  return j;
}

inline json certificate_json(const Certificate& c) {
  if (const auto* cs = std::get_if<CreationSequence>(&c)) {
    return {{"creation_sequence", cs->bits}, {"order", cs->order}};
  }
  if (const auto* peo = std::get_if<EliminationOrder>(&c)) return {{"elimination_order", peo->order}};
  if (const auto* sp = std::get_if<SplitPartition>(&c)) {
    return {{"clique", sp->clique}, {"independent", sp->independent}};
  }
  return nullptr;
}

inline json verdict_json(const ClassVerdict& v, const FiniteGroup* g = nullptr) {
  json j{{"member", v.member}};
  j["witness"] = v.witness ? witness_json(*v.witness, g) : json(nullptr);
  j["certificate"] = certificate_json(v.certificate);
  if (v.graph_class == GraphClass::perfect_bounded) j["max_hole_length"] = v.bound;
  return j;
}

struct ClassifyResult {
  json report;
  bool all_members = true;
};

/// Everything `classify` prints for one group. `perfect_bound` is the longest
/// odd hole/antihole searched.
inline ClassifyResult classify_group(const FiniteGroup& g, std::size_t perfect_bound = 7) {
  ClassifyResult out;
  auto& j = out.report;
  const auto pg = power_graph(g);
  j["tool_version"] = tool_version;
  j["group"] = to_string(g.spec());
  j["order"] = g.order();
  json hist = json::object();
  for (const auto& [o, count] : order_histogram(g)) hist[std::to_string(o)] = count;
  j["element_order_histogram"] = hist;
  j["exponent"] = group_exponent(g);
  j["is_cyclic"] = is_cyclic(g);
  j["is_abelian"] = is_abelian(g);
  const bool nilpotent = is_nilpotent(g);
  j["is_nilpotent"] = nilpotent;
  j["is_complete"] = is_complete(pg);
  j["is_connected"] = is_connected(pg);
  j["is_eulerian"] = is_eulerian(pg);
  j["edge_counts"] = {
      {"power", pg.edge_count()},
      {"predicted_power", predicted_edge_count(g)},
      {"proper", pg.edge_count() - (g.order() - 1)},
      {"enhanced", enhanced_power_graph(g).edge_count()},
      {"commuting", g.order() <= commuting_report_limit ? json(commuting_graph(g).edge_count()) : json(nullptr)},
  };
  if (g.order() > 1) {
    const auto gk = prime_graph(g);
    j["prime_graph"] = {{"primes", gk.primes}, {"edges", gk.edges}, {"is_null", gk.is_null()}};
  } else {
    j["prime_graph"] = {{"primes", json::array()}, {"edges", json::array()}, {"is_null", true}};
  }
  const ClassVerdict verdicts[] = {is_cograph(pg), is_chordal(pg), is_split(pg), is_threshold(pg),
                                   is_perfect_bounded(pg, perfect_bound)};
  json classes = json::object();
  for (const auto& v : verdicts) {
    classes[to_string(v.graph_class)] = verdict_json(v, &g);
    out.all_members = out.all_members && v.member;
  }
  j["classes"] = classes;
  const auto ic = intersection_condition(g);
  json ic_json{{"holds", ic.holds}, {"witness", nullptr}};
  if (ic.witness) ic_json["witness"] = {g.label(ic.witness->first), g.label(ic.witness->second)};
  j["predicted"] = {
      {"cograph", nilpotent ? json(predicted_cograph_nilpotent(g)) : json(nullptr)},
      {"chordal", nilpotent ? json(predicted_chordal_nilpotent(g)) : json(nullptr)},
      {"two_k2_free", predicted_2k2free(g)},
      {"intersection_condition", ic_json},
  };
  const auto col = chain_layer_coloring(directed_power_relation(g));
  j["chain_coloring"] = {{"colors", col.color_count}, {"clique_size", col.clique_size()}};
  return out;
}

inline json harness_json(const HarnessReport& r) {
  json j;
  j["tool_version"] = tool_version;
  j["theorem"] = theorem_name(r.id);
  for (const auto& t : theorem_registry) {
    if (t.id == r.id) j["statement"] = t.description;
  }
  j["max_order"] = r.max_order;
  j["groups_tested"] = r.checks.size();
  const auto bad = r.counterexamples();
  j["counterexample_count"] = bad.size();
  j["passed"] = bad.empty();
  j["wall_time_ms"] = r.wall_time_ms;
  const auto check_json = [](const GroupCheck& c) {
    json cj{{"group", c.group}, {"order", c.order}, {"predicted", c.predicted}, {"actual", c.actual}};
    if (!c.details.empty()) cj["details"] = c.details;
    if (c.witness) cj["witness"] = witness_json(*c.witness);
    return cj;
  };
  json cx = json::array();
  for (const auto* c : bad) cx.push_back(check_json(*c));
  j["counterexamples"] = cx;
  json all = json::array();
  for (const auto& c : r.checks) all.push_back(check_json(c));
  j["checks"] = all;
  return j;
}

/// Graph payload for `emit --format json`; `directed` lists arcs instead of edges.
inline json graph_json(const std::string& group, const std::string& kind, std::size_t vertex_count,
                       const std::vector<Edge>& edges, const std::vector<std::string>& labels, bool directed) {
  json j{{"tool_version", tool_version}, {"group", group}, {"kind", kind}, {"vertex_count", vertex_count},
         {"labels", labels}};
  json e = json::array();
  for (auto [u, v] : edges) e.push_back({u, v});
  j[directed ? "arcs" : "edges"] = e;
  return j;
}

}  // namespace powergraph
