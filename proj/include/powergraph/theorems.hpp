// Classification predicates for power graphs, computed from group structure
// alone, and the two explicit C5 constructions.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/finite_group.hpp"
#include "powergraph/forbidden.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/number_theory.hpp"
#include "powergraph/permutation.hpp"
#include "powergraph/power_graphs.hpp"

namespace powergraph {

using element = FiniteGroup::element;

namespace detail {

inline bool in_cyclic_subgroup(const FiniteGroup& g, element x, element gen) {
  const auto sub = g.powers_of(gen);
  return std::binary_search(sub.begin(), sub.end(), x);
}

inline void require_nilpotent(const FiniteGroup& g, const char* who) {
  if (!is_nilpotent(g)) throw std::invalid_argument(std::string(who) + ": group is not nilpotent");
}

// The unique cyclic subgroup <a> of index 2 with every element outside it an
// involution, if one exists; returns its order.
inline std::optional<std::uint64_t> dihedral_rotation_order(const FiniteGroup& g) {
  const auto n = g.order();
  if (n < 6 || n % 2 != 0) return std::nullopt;
  const auto m = static_cast<std::uint32_t>(n / 2);
  const auto orders = g.element_orders();
  const auto it = std::find(orders.begin(), orders.end(), m);
  if (it == orders.end()) return std::nullopt;
  std::vector<bool> inside(n, false);
  for (auto x : g.powers_of(static_cast<element>(it - orders.begin()))) inside[x] = true;
  for (element x = 0; x < n; ++x) {
    if (!inside[x] && orders[x] != 2) return std::nullopt;
  }
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Intersection condition

struct IntersectionResult {
  bool holds = true;
  /// Least index pair x < y, both of order > 2, neither in the other's cyclic subgroup.
  std::optional<std::pair<element, element>> witness;
};

/// Checked on cyclic subgroups: fails iff two elements of order > 2 each lie
/// outside the cyclic subgroup generated by the other.
inline IntersectionResult intersection_condition(const FiniteGroup& g) {
  std::vector<element> big;
  for (element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) > 2) big.push_back(x);
  }
  for (std::size_t i = 0; i < big.size(); ++i) {
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      const auto x = big[i], y = big[j];
      if (g.cyclic_class_of(x) == g.cyclic_class_of(y)) continue;
      if (!detail::in_cyclic_subgroup(g, x, y) && !detail::in_cyclic_subgroup(g, y, x)) {
        return {false, std::make_pair(x, y)};
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Predicted classes

/// Nilpotent G: cograph iff |G| is a prime power or G is cyclic of order pq.
/// Throws std::invalid_argument for non-nilpotent groups.
inline bool predicted_cograph_nilpotent(const FiniteGroup& g) {
  detail::require_nilpotent(g, "predicted_cograph_nilpotent");
  const auto n = g.order();
  if (n == 1 || is_prime_power(n)) return true;
  const auto f = factorize(n);
  return f.size() == 2 && f[0] != f[1] && is_cyclic(g);
}

/// Nilpotent G: chordal iff |G| is a prime power, or |G| has two prime
/// divisors with one Sylow subgroup cyclic and the other of prime exponent.
inline bool predicted_chordal_nilpotent(const FiniteGroup& g) {
  detail::require_nilpotent(g, "predicted_chordal_nilpotent");
  const auto n = g.order();
  if (n == 1 || is_prime_power(n)) return true;
  const auto primes = prime_divisors(n);
  if (primes.size() != 2) return false;
  const auto orders = g.element_orders();
  const auto sylow_cyclic = [&](std::uint64_t p) {
    return std::find(orders.begin(), orders.end(), p_part(n, p)) != orders.end();
  };
  const auto prime_exponent = [&](std::uint64_t p) {
    for (auto o : orders) {
      if (p_part(o, p) > p) return false;
    }
    return true;
  };
  const auto p = primes[0], q = primes[1];
  return (sylow_cyclic(p) && prime_exponent(q)) || (sylow_cyclic(q) && prime_exponent(p));
}

/// 2K2-free iff G is cyclic of prime power order or of order 2p, an
/// elementary abelian 2-group, or dihedral of order 2^k, 2p^k or 4p (p odd).
inline bool predicted_2k2free(const FiniteGroup& g) {
  const auto n = g.order();
  if (n == 1) return true;
  if (is_cyclic(g)) {
    if (is_prime_power(n)) return true;
    return n % 2 == 0 && is_prime(n / 2) && n / 2 > 2;
  }
  if (group_exponent(g) <= 2) return true;
  const auto m = detail::dihedral_rotation_order(g);
  if (!m) return false;
  if (is_prime_power(*m)) return true;
  return *m % 2 == 0 && *m / 2 > 2 && is_prime(*m / 2);
}

// ---------------------------------------------------------------------------
// PSL(2, q)

struct Psl2Condition {
  bool holds = false;
  /// Which branch of the case analysis q falls in: "even-n-even", "even-n-odd",
  /// "char-3", or "p>3:" followed by the shape of {(q-1)/2, (q+1)/2} when the
  /// condition holds ("2^k,3^k", "2^k,3r", "3^k,2r", "2r,3s", "other").
  std::string case_tag;
  std::array<std::uint64_t, 3> tower_orders{};
};

/// With d = gcd(2, q-1): each of q, (q-1)/d, (q+1)/d must be 1, a prime power,
/// or a product of two distinct primes. Throws std::invalid_argument unless
/// q >= 4 is a prime power.
inline Psl2Condition psl2_cograph_condition(std::uint64_t q) {
  const auto pp = q >= 4 ? is_prime_power(q) : std::nullopt;
  if (!pp) throw std::invalid_argument("psl2_cograph_condition: q must be a prime power >= 4");
  const std::uint64_t d = q % 2 == 0 ? 1 : 2;
  Psl2Condition out;
  out.tower_orders = {q, (q - 1) / d, (q + 1) / d};
  out.holds = std::all_of(out.tower_orders.begin(), out.tower_orders.end(),
                          [](std::uint64_t t) { return is_unit_prime_power_or_two_prime_product(t); });
  if (pp->prime == 2) {
    out.case_tag = pp->exponent % 2 == 0 ? "even-n-even" : "even-n-odd";
    return out;
  }
  if (pp->prime == 3) {
    out.case_tag = "char-3";
    return out;
  }
  out.case_tag = "p>3";
  if (!out.holds) return out;
  const auto power_of = [](std::uint64_t x, std::uint64_t p) { return p_part(x, p) == x; };
  const auto prime_times = [](std::uint64_t x, std::uint64_t p) { return x % p == 0 && is_prime(x / p); };
  const auto a = out.tower_orders[1], b = out.tower_orders[2];
  const auto either = [&](auto f, auto h) { return (f(a) && h(b)) || (f(b) && h(a)); };
  const auto pow2 = [&](std::uint64_t x) { return power_of(x, 2); };
  const auto pow3 = [&](std::uint64_t x) { return power_of(x, 3); };
  const auto twice = [&](std::uint64_t x) { return prime_times(x, 2); };
  const auto thrice = [&](std::uint64_t x) { return prime_times(x, 3); };
  if (either(pow2, pow3)) {
    out.case_tag += ":2^k,3^k";
  } else if (either(pow2, thrice)) {
    out.case_tag += ":2^k,3r";
  } else if (either(pow3, twice)) {
    out.case_tag += ":3^k,2r";
  } else if (either(twice, thrice)) {
    out.case_tag += ":2r,3s";
  } else {
    out.case_tag += ":other";
  }
  return out;
}

// ---------------------------------------------------------------------------
// C5 constructions

/// Transpositions (1,2),(3,4),(5,1),(2,3),(4,5): consecutive ones are disjoint.
inline constexpr std::array<std::pair<int, int>, 5> c5_transpositions{{{1, 2}, {3, 4}, {5, 1}, {2, 3}, {4, 5}}};

/// Five involutions of S5 inducing C5 in the commuting graph, in cycle order.
/// Vertices are element indices of symmetric_group(5). Throws std::logic_error
/// if the check fails.
inline Witness commuting_c5_witness() {
  const auto s5 = symmetric_group(5);
  Witness w{Pattern::c5(), {}, {}};
  for (auto [a, b] : c5_transpositions) {
    const std::array<Permutation::point, 2> pts{static_cast<Permutation::point>(a - 1),
                                                static_cast<Permutation::point>(b - 1)};
    const auto t = Permutation::cycle(5, pts);
    const auto idx = s5.find_permutation(t);
    if (!idx) throw std::logic_error("commuting_c5_witness: transposition missing from S5");
    w.vertices.push_back(*idx);
    w.labels.push_back(s5.label(*idx));
  }
  if (!witness_holds(commuting_graph(s5), w)) {
    throw std::logic_error("commuting_c5_witness: transpositions do not induce C5");
  }
  return w;
}

/// Whether <a, b> is cyclic, for permutations of a common degree.
inline bool closure_is_cyclic(const Permutation& a, const Permutation& b) {
  if (a * b != b * a) return false;
  std::set<Permutation> seen{Permutation(a.degree())};
  std::vector<Permutation> queue{Permutation(a.degree())};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto* s : {&a, &b}) {
      auto y = queue[i] * *s;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return std::any_of(queue.begin(), queue.end(),
                     [&](const Permutation& x) { return x.order() == queue.size(); });
}

/// Solves b_x + b_y = len for each (x, y) in `pairs` (points 1..5) by exact
/// elimination. Throws std::logic_error unless the unique solution is a
/// vector of positive integers.
inline std::array<std::uint32_t, 5> solve_block_sizes(const std::array<std::pair<int, int>, 5>& pairs,
                                                      const std::array<std::uint32_t, 5>& lengths) {
  // Augmented integer matrix; fraction-free Gauss-Jordan.
  std::array<std::array<long long, 6>, 5> m{};
  for (std::size_t r = 0; r < 5; ++r) {
    m[r][static_cast<std::size_t>(pairs[r].first - 1)] += 1;
    m[r][static_cast<std::size_t>(pairs[r].second - 1)] += 1;
    m[r][5] = lengths[r];
  }
  for (std::size_t c = 0; c < 5; ++c) {
    std::size_t piv = c;
    while (piv < 5 && m[piv][c] == 0) ++piv;
    if (piv == 5) throw std::logic_error("solve_block_sizes: singular system");
    std::swap(m[c], m[piv]);
    for (std::size_t r = 0; r < 5; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const auto f = m[r][c], p = m[c][c];
      for (std::size_t k = 0; k < 6; ++k) m[r][k] = m[r][k] * p - m[c][k] * f;
      long long gcd = 0;
      for (auto v : m[r]) gcd = std::gcd(gcd, v);
      if (gcd > 1) {
        for (auto& v : m[r]) v /= gcd;
      }
    }
  }
  std::array<std::uint32_t, 5> b{};
  for (std::size_t r = 0; r < 5; ++r) {
    if (m[r][5] % m[r][r] != 0 || m[r][5] / m[r][r] <= 0) {
      throw std::logic_error("solve_block_sizes: no positive integer solution");
    }
    b[r] = static_cast<std::uint32_t>(m[r][5] / m[r][r]);
  }
  return b;
}

struct EnhancedC5 {
  std::array<std::uint32_t, 5> lengths{};
  std::array<std::uint32_t, 5> blocks{};
  std::vector<Permutation> cycles;
  /// Vertices 0..4 index `cycles`; labels are cycle notation.
  Witness witness;
};

/// Replaces point i of the transposition pattern by a block of b_i points so
/// that the five cycles get pairwise coprime lengths; in S_n with n = sum b_i
/// they induce C5 in the enhanced power graph. Throws std::logic_error if any
/// check fails.
inline EnhancedC5 enhanced_c5_witness(const std::array<std::uint32_t, 5>& lengths = {7, 5, 11, 4, 9}) {
  EnhancedC5 out;
  out.lengths = lengths;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (std::gcd(lengths[i], lengths[j]) != 1) throw std::logic_error("enhanced_c5_witness: lengths not coprime");
  out.blocks = solve_block_sizes(c5_transpositions, lengths);
  std::array<std::uint32_t, 6> start{};
  for (std::size_t i = 0; i < 5; ++i) start[i + 1] = start[i] + out.blocks[i];
  const auto degree = start[5];
  for (auto [x, y] : c5_transpositions) {
    std::vector<Permutation::point> pts;
    for (auto blk : {x, y}) {
      const auto b = static_cast<std::size_t>(blk - 1);
      for (auto p = start[b]; p < start[b + 1]; ++p) pts.push_back(static_cast<Permutation::point>(p));
    }
    std::sort(pts.begin(), pts.end());
    out.cycles.push_back(Permutation::cycle(degree, pts));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    if (out.cycles[i].order() != lengths[i]) throw std::logic_error("enhanced_c5_witness: wrong cycle length");
    for (Vertex j = i + 1; j < 5; ++j) {
      const auto [a, b] = c5_transpositions[i];
      const auto [c, d] = c5_transpositions[j];
      const bool disjoint = a != c && a != d && b != c && b != d;
      const bool cyclic = closure_is_cyclic(out.cycles[i], out.cycles[j]);
      if (disjoint != cyclic) throw std::logic_error("enhanced_c5_witness: adjacency does not follow disjointness");
      if (cyclic) edges.emplace_back(i, j);
    }
  }
  out.witness = Witness{Pattern::c5(), {0, 1, 2, 3, 4}, {}};
  for (const auto& c : out.cycles) out.witness.labels.push_back(c.to_cycle_string());
  if (!witness_holds(Graph::from_edges(5, edges), out.witness)) {
    throw std::logic_error("enhanced_c5_witness: cycles do not induce C5");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemmas on p-elements

/// No induced P4 or C4 among the elements of p-power order (identity included).
inline bool lemma_pp_check(const FiniteGroup& g, const Graph& power, std::uint64_t p) {
  const auto elems = sylow_p_elements(g, p);
  const auto sub = induced_subgraph(power, elems);
  return !find_forbidden(sub, Pattern::p4()) && !find_forbidden(sub, Pattern::c4());
}

inline bool lemma_pp_check(const FiniteGroup& g, std::uint64_t p) { return lemma_pp_check(g, power_graph(g), p); }

struct LemmaP2 {
  bool cyclic_or_prime_exponent = false;
  bool p3_free_off_identity = false;
  /// Induced P3 in the proper power graph, as group elements.
  std::optional<Witness> witness;
  bool holds() const { return cyclic_or_prime_exponent == p3_free_off_identity; }
};

/// For |G| = p^k: P(G) minus the identity has no induced P3 iff G is cyclic
/// or has exponent p. Throws std::invalid_argument if |G| is not a prime power.
inline LemmaP2 lemma_p2_sides(const FiniteGroup& g) {
  const auto pp = is_prime_power(g.order());
  if (!pp) throw std::invalid_argument("lemma_p2_check: order is not a prime power");
  LemmaP2 out;
  out.cyclic_or_prime_exponent = is_cyclic(g) || group_exponent(g) == pp->prime;
  out.witness = find_forbidden(proper_power_graph(g), Pattern::p3());
  if (out.witness) {
    for (auto& v : out.witness->vertices) ++v;
  }
  out.p3_free_off_identity = !out.witness;
  return out;
}

inline bool lemma_p2_check(const FiniteGroup& g) { return lemma_p2_sides(g).holds(); }

}  // namespace powergraph
