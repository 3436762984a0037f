// The enumerated group catalog: every abelian group (by invariant factors),
// the parameterized non-abelian families, and nilpotent products of a
// non-abelian p-group with an abelian group.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "powergraph/group_spec.hpp"
#include "powergraph/number_theory.hpp"

namespace powergraph {

struct CatalogEntry {
  GroupSpec spec;
  std::uint64_t order = 0;
  std::string name;
};

namespace detail {

// Partitions of e into non-increasing parts.
inline void partitions(std::uint32_t e, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                       std::vector<std::vector<std::uint32_t>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (auto part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

inline int family_rank(const GroupSpec& s) {
  switch (s.family) {
    case Family::cyclic:
    case Family::elementary_abelian:
      return 0;
    case Family::dihedral:
      return 1;
    case Family::dicyclic:
      return 2;
    case Family::heisenberg:
      return 3;
    case Family::product: {
      const bool abelian = std::all_of(s.factors.begin(), s.factors.end(), [](const GroupSpec& f) {
        return f.family == Family::cyclic || f.family == Family::elementary_abelian;
      });
      return abelian ? 0 : 4;
    }
    case Family::symmetric:
      return 5;
    case Family::alternating:
      return 6;
    case Family::psl2:
      return 7;
  }
  return 8;
}

}  // namespace detail

/// One spec per abelian group of order n, written by invariant factors
/// d1 x d2 x ... with d_{i+1} | d_i ("C1" for the trivial group).
inline std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n) {
  if (n == 1) return {GroupSpec::cyclic(1)};
  std::map<std::uint64_t, std::uint32_t> exps;
  for (auto p : factorize(n)) ++exps[p];
  std::vector<std::vector<std::uint64_t>> factor_lists{{}};
  for (auto [p, e] : exps) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> cur;
    detail::partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& fl : factor_lists) {
      for (const auto& part : parts) {
        auto merged = fl;
        merged.resize(std::max(merged.size(), part.size()), 1);
        for (std::size_t i = 0; i < part.size(); ++i) merged[i] *= ipow(p, part[i]);
        next.push_back(std::move(merged));
      }
    }
    factor_lists = std::move(next);
  }
  std::vector<GroupSpec> specs;
  for (const auto& fl : factor_lists) {
    std::vector<GroupSpec> parts;
    for (auto d : fl) parts.push_back(GroupSpec::cyclic(d));
    specs.push_back(GroupSpec::product(parts));
  }
  return specs;
}

/// Every catalog group of order <= max_order, sorted by (order, family, name).
inline std::vector<CatalogEntry> catalog(std::uint64_t max_order) {
  std::vector<CatalogEntry> out;
  const auto add = [&](GroupSpec s) {
    const auto order = spec_order(s);
    if (order >= 1 && order <= max_order) out.push_back({s, order, to_string(s)});
  };
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    for (auto& s : abelian_groups_of_order(n)) add(std::move(s));
  }
  for (std::uint64_t n = 3; 2 * n <= max_order; ++n) add(GroupSpec::dihedral(n));
  for (std::uint64_t n = 2; 4 * n <= max_order; ++n) add(GroupSpec::dicyclic(n));
  // Non-abelian p-groups that also seed the nilpotent products below.
  std::vector<GroupSpec> p_groups;
  for (std::uint64_t p = 3; p * p * p <= max_order; p += 2) {
    if (is_prime(p)) p_groups.push_back(GroupSpec::heisenberg(p));
  }
  for (std::uint64_t m = 4; 2 * m <= max_order; m *= 2) p_groups.push_back(GroupSpec::dihedral(m));
  for (std::uint64_t m = 2; 4 * m <= max_order; m *= 2) p_groups.push_back(GroupSpec::dicyclic(m));
  for (const auto& pg : p_groups) {
    if (pg.family == Family::heisenberg) add(pg);
  }
  for (const auto& pg : p_groups) {
    const auto base = spec_order(pg);
    for (std::uint64_t m = 2; base * m <= max_order; ++m) {
      for (const auto& a : abelian_groups_of_order(m)) add(GroupSpec::product({pg, a}));
    }
  }
  for (std::uint64_t n = 3; spec_order(GroupSpec::symmetric(n)) <= max_order; ++n) add(GroupSpec::symmetric(n));
  for (std::uint64_t n = 4; spec_order(GroupSpec::alternating(n)) <= max_order; ++n) add(GroupSpec::alternating(n));
  for (std::uint64_t q = 4; q * (q * q - 1) / 2 <= max_order; ++q) {
    if (is_prime_power(q) && spec_order(GroupSpec::psl2(q)) <= max_order) add(GroupSpec::psl2(q));
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tuple(a.order, detail::family_rank(a.spec), a.name) <
           std::tuple(b.order, detail::family_rank(b.spec), b.name);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const CatalogEntry& a, const CatalogEntry& b) { return a.spec == b.spec; }),
            out.end());
  return out;
}

/// Streams the catalog entries satisfying `keep` to `visit`, in catalog order.
inline void for_each_catalog_group(std::uint64_t max_order, const std::function<bool(const CatalogEntry&)>& keep,
                                   const std::function<void(const CatalogEntry&)>& visit) {
  for (const auto& e : catalog(max_order)) {
    if (!keep || keep(e)) visit(e);
  }
}

}  // namespace powergraph
