// Command-line front end. Exit codes: 0 success, 1 counterexample or
// non-membership found, 2 usage, spec or order-cap error.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powergraph/catalog.hpp"
#include "powergraph/finite_group.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/harness.hpp"
#include "powergraph/power_graphs.hpp"
#include "powergraph/recognizers.hpp"
#include "powergraph/report.hpp"
#include "powergraph/theorems.hpp"

namespace powergraph::cli {

inline constexpr const char* order_cap_env = "POWERGRAPH_ORDER_CAP";

inline std::uint64_t order_cap_from_env(std::uint64_t fallback) {
  const char* v = std::getenv(order_cap_env);
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    const auto cap = std::stoull(v, &used);
    if (used == std::string(v).size() && cap > 0) return cap;
  } catch (const std::exception&) {
  }
  throw SpecError(std::string(order_cap_env) + " must be a positive integer");
}

namespace detail {

inline void emit_graph(std::ostream& out, const FiniteGroup& g, const std::string& kind, const std::string& format) {
  const auto name = to_string(g.spec());
  if (kind == "directed") {
    const auto arcs = directed_power_arcs(directed_power_relation(g));
    if (format == "edges") {
      for (auto [u, v] : arcs) out << u << ' ' << v << '\n';
    } else if (format == "dot") {
      out << "digraph \"" << dot_escape(name) << "\" {\n";
      for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
      for (auto [u, v] : arcs) out << "  " << u << " -> " << v << ";\n";
      out << "}\n";
    } else {
      std::vector<std::string> labels;
      for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
      out << graph_json(name, kind, g.order(), arcs, labels, true).dump(2) << '\n';
    }
    return;
  }
  Graph graph;
  std::vector<std::string> labels;
  if (kind == "gk") {
    if (g.order() < 2) throw SpecError("the trivial group has no prime graph");
    const auto pg = prime_graph(g);
    graph = pg.as_graph();
    for (auto p : pg.primes) labels.push_back(std::to_string(p));
  } else {
    if (kind == "power") {
      graph = power_graph(g);
    } else if (kind == "proper") {
      graph = proper_power_graph(g);
    } else if (kind == "enhanced") {
      graph = enhanced_power_graph(g);
    } else {
      graph = commuting_graph(g);
    }
    const Vertex shift = kind == "proper" ? 1 : 0;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) labels.push_back(g.label(v + shift));
  }
  if (format == "edges") {
    write_edge_list(out, graph);
  } else if (format == "dot") {
    write_dot(out, graph, name + " " + kind, [&](Vertex v) { return labels[v]; });
  } else {
    out << graph_json(name, kind, graph.vertex_count(), graph.edges(), labels, false).dump(2) << '\n';
  }
}

inline void print_info(std::ostream& out, const FiniteGroup& g) {
  out << "group: " << to_string(g.spec()) << '\n';
  out << "order: " << g.order() << '\n';
  out << "exponent: " << group_exponent(g) << '\n';
  out << "cyclic: " << (is_cyclic(g) ? "yes" : "no") << '\n';
  out << "abelian: " << (is_abelian(g) ? "yes" : "no") << '\n';
  out << "nilpotent: " << (is_nilpotent(g) ? "yes" : "no") << '\n';
  out << "cyclic subgroups: " << g.cyclic_class_count() << '\n';
  out << "element orders:";
  for (const auto& [o, count] : order_histogram(g)) out << ' ' << o << ':' << count;
  out << '\n';
  out << "representation: "
      << (g.is_permutation_backed() ? (g.is_table_backed() ? "permutations, table" : "permutations") : "closed form")
      << '\n';
}

}  // namespace detail

/// Runs one command line (args exclude the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power graphs of finite groups: construction, graph classes and theorem checks", "powergraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));
  std::uint64_t cap_flag = 0;
  app.add_option("--order-cap", cap_flag,
                 "Refuse groups larger than this (default 10000, or $" + std::string(order_cap_env) + ")");

  std::string spec;
  auto* info = app.add_subcommand("info", "Basic facts about a group");
  info->add_option("group", spec, "Group spec, e.g. C4xC9, D10, Q8, PSL2(7)")->required();

  std::string kind = "power", format = "edges";
  auto* emit = app.add_subcommand("emit", "Write one graph of a group");
  emit->add_option("group", spec, "Group spec")->required();
  emit->add_option("--kind", kind, "Graph kind")
      ->check(CLI::IsMember({"power", "directed", "proper", "enhanced", "commuting", "gk"}));
  emit->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "edges", "json"}));

  std::size_t bound = 7;
  auto* classify = app.add_subcommand("classify", "JSON report with graph-class verdicts");
  classify->add_option("group", spec, "Group spec")->required();
  classify->add_option("--bound", bound, "Longest odd hole/antihole searched (odd, >= 5)")
      ->check(CLI::Range(5, 99));

  std::string theorem;
  std::uint64_t max_order = 100;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Check a theorem over the catalog");
  verify->add_option("theorem", theorem, "Theorem id (see --list)");
  verify->add_option("--max-order", max_order, "Largest group order checked");
  verify->add_flag("--list", list, "Print the theorem registry");

  std::uint64_t max_q = 64;
  bool direct = false;
  auto* search = app.add_subcommand("search-psl2", "Prime powers q whose PSL(2,q) passes the cograph condition");
  search->add_option("--max-q", max_q, "Largest q considered");
  search->add_flag("--verify", direct, "List every q and compare with a direct check on P(PSL(2,q))");

  auto* cat = app.add_subcommand("catalog", "List the catalog groups");
  cat->add_option("--max-order", max_order, "Largest group order listed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto cap = cap_flag > 0 ? cap_flag : order_cap_from_env(default_order_cap);
    if (*info) {
      detail::print_info(out, build_group(spec, cap));
      return 0;
    }
    if (*emit) {
      detail::emit_graph(out, build_group(spec, cap), kind, format);
      return 0;
    }
    if (*classify) {
      if (bound % 2 == 0) throw SpecError("--bound must be odd");
      const auto r = classify_group(build_group(spec, cap), bound);
      out << r.report.dump(2) << '\n';
      return r.all_members ? 0 : 1;
    }
    if (*verify) {
      if (list) {
        for (const auto& t : theorem_registry) out << t.name << '\t' << t.description << '\n';
        return 0;
      }
      if (theorem.empty()) throw SpecError("verify: missing theorem id (try --list)");
      const auto id = parse_theorem_id(theorem);
      if (!id) throw SpecError("verify: unknown theorem id '" + theorem + "' (try --list)");
      const auto report = verify_theorem(*id, max_order, cap);
      out << harness_json(report).dump(2) << '\n';
      return report.passed() ? 0 : 1;
    }
    if (*search) {
      int code = 0;
      for (std::uint64_t q = 4; q <= max_q; ++q) {
        if (!is_prime_power(q)) continue;
        const auto cond = psl2_cograph_condition(q);
        if (!cond.holds && !direct) continue;
        const auto order = spec_order(GroupSpec::psl2(q));
        out << "q=" << q << " order=" << order << " condition=" << (cond.holds ? "true" : "false")
            << " case=" << cond.case_tag << " towers=" << cond.tower_orders[0] << ',' << cond.tower_orders[1] << ','
            << cond.tower_orders[2];
        if (direct) {
          if (order <= cap) {
            const bool cograph = is_cograph(power_graph(psl2_group(static_cast<std::uint32_t>(q)))).member;
            out << " cograph=" << (cograph ? "true" : "false");
            if (cograph != cond.holds) {
              out << " MISMATCH";
              code = 1;
            }
          } else {
            out << " cograph=skipped";
          }
        }
        out << '\n';
      }
      return code;
    }
    if (*cat) {
      for (const auto& e : catalog(max_order)) out << e.order << '\t' << e.name << '\n';
      return 0;
    }
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const OrderCapError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace powergraph::cli
