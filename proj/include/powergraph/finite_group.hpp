// Finite groups as indexed elements with a multiplication oracle.
//
// Element 0 is always the identity. Every group caches, per element, its
// order, its inverse and the cyclic subgroup it generates; elements that
// generate the same cyclic subgroup share one "cyclic class".
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powergraph/finite_field.hpp"
#include "powergraph/group_spec.hpp"
#include "powergraph/number_theory.hpp"
#include "powergraph/permutation.hpp"

namespace powergraph {

class OrderCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_order_cap = 10000;

/// Permutation-backed groups up to this order get a full multiplication table.
inline constexpr std::size_t table_order_limit = 2000;

namespace detail {

struct MultiplicationRule {
  virtual ~MultiplicationRule() = default;
  virtual std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::string label(std::uint32_t g) const = 0;
};

}  // namespace detail

class FiniteGroup {
 public:
  using element = std::uint32_t;

  std::size_t order() const noexcept { return state_->order; }
  static constexpr element identity() noexcept { return 0; }
  const GroupSpec& spec() const noexcept { return state_->spec; }

  element multiply(element a, element b) const {
    const auto& s = *state_;
    if (!s.table.empty()) return s.table[static_cast<std::size_t>(a) * s.order + b];
    return s.rule->multiply(a, b);
  }

  element inverse(element g) const { return state_->inverse[check(g)]; }

  /// Least k >= 1 with g^k = identity. Throws std::out_of_range.
  std::uint32_t element_order(element g) const { return state_->orders[check(g)]; }
  std::span<const std::uint32_t> element_orders() const noexcept { return state_->orders; }

  /// The cyclic subgroup <g>, sorted ascending.
  std::span<const element> powers_of(element g) const {
    return class_subgroup(state_->class_of[check(g)]);
  }

  std::size_t cyclic_class_count() const noexcept { return state_->class_offsets.size() - 1; }
  std::size_t cyclic_class_of(element g) const { return state_->class_of[check(g)]; }

  /// Generators of the c-th cyclic subgroup, sorted; classes are numbered by least member.
  std::span<const element> class_members(std::size_t c) const {
    const auto& s = *state_;
    return {s.members.data() + s.member_offsets.at(c), s.members.data() + s.member_offsets.at(c + 1)};
  }

  std::span<const element> class_subgroup(std::size_t c) const {
    const auto& s = *state_;
    return {s.subgroups.data() + s.class_offsets.at(c), s.subgroups.data() + s.class_offsets.at(c + 1)};
  }

  std::string label(element g) const { return state_->rule->label(check(g)); }

  bool is_table_backed() const noexcept { return !state_->table.empty(); }
  bool is_permutation_backed() const noexcept { return !state_->permutations.empty(); }

  const Permutation& permutation(element g) const {
    if (!is_permutation_backed()) throw std::logic_error("FiniteGroup: not permutation-backed");
    return state_->permutations[check(g)];
  }

  std::optional<element> find_permutation(const Permutation& p) const {
    const auto it = state_->perm_index.find(p);
    if (it == state_->perm_index.end()) return std::nullopt;
    return it->second;
  }

  // Assembled by the builders below.
  struct State {
    GroupSpec spec;
    std::size_t order = 0;
    std::shared_ptr<const detail::MultiplicationRule> rule;
    std::vector<element> table;
    std::vector<Permutation> permutations;
    std::unordered_map<Permutation, element, PermutationHash> perm_index;
    std::vector<std::uint32_t> orders;
    std::vector<element> inverse;
    std::vector<std::uint32_t> class_of;
    std::vector<element> subgroups;
    std::vector<std::size_t> class_offsets;
    std::vector<element> members;
    std::vector<std::size_t> member_offsets;
  };

  explicit FiniteGroup(std::shared_ptr<const State> state) : state_(std::move(state)) {}

 private:
  element check(element g) const {
    if (g >= state_->order) throw std::out_of_range("FiniteGroup: element index out of range");
    return g;
  }

  std::shared_ptr<const State> state_;
};

namespace detail {

struct CyclicRule final : MultiplicationRule {
  std::uint32_t n;
  explicit CyclicRule(std::uint32_t n_) : n(n_) {}
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override { return (a + b) % n; }
  std::string label(std::uint32_t g) const override {
    if (g == 0) return "e";
    return g == 1 ? "a" : "a^" + std::to_string(g);
  }
};

inline std::string power_label(const char* base, std::uint32_t k) {
  if (k == 0) return "";
  return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
}

// r^k at index k, s*r^k at index n + k; s r s = r^-1.
struct DihedralRule final : MultiplicationRule {
  std::uint32_t n;
  explicit DihedralRule(std::uint32_t n_) : n(n_) {}
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override {
    const bool ra = a < n, rb = b < n;
    const std::uint32_t i = ra ? a : a - n, j = rb ? b : b - n;
    if (ra && rb) return (i + j) % n;
    if (ra) return n + (j + n - i) % n;
    if (rb) return n + (i + j) % n;
    return (j + n - i) % n;
  }
  std::string label(std::uint32_t g) const override {
    if (g == 0) return "e";
    if (g < n) return power_label("r", g);
    return "s" + power_label("r", g - n);
  }
};

// a^k at index k, a^k b at index 2n + k; b^2 = a^n, b a b^-1 = a^-1.
struct DicyclicRule final : MultiplicationRule {
  std::uint32_t n;
  explicit DicyclicRule(std::uint32_t n_) : n(n_) {}
  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const override {
    const std::uint32_t m = 2 * n;
    const bool bx = x >= m, by = y >= m;
    const std::uint32_t i = bx ? x - m : x, j = by ? y - m : y;
    if (!bx && !by) return (i + j) % m;
    if (!bx) return m + (i + j) % m;
    if (!by) return m + (i + m - j) % m;
    return (i + m - j + n) % m;
  }
  std::string label(std::uint32_t g) const override {
    const std::uint32_t m = 2 * n;
    if (g == 0) return "e";
    if (g < m) return power_label("a", g);
    return power_label("a", g - m) + "b";
  }
};

// Vectors over GF(p); index digits are coordinates, first coordinate most significant.
struct ElementaryAbelianRule final : MultiplicationRule {
  std::uint32_t p, k;
  ElementaryAbelianRule(std::uint32_t p_, std::uint32_t k_) : p(p_), k(k_) {}
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      r += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return r;
  }
  std::string label(std::uint32_t g) const override {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = k; i-- > 0;) {
      d[i] = g % p;
      g /= p;
    }
    std::string out = "(";
    for (std::uint32_t i = 0; i < k; ++i) out += (i ? "," : "") + std::to_string(d[i]);
    return out + ")";
  }
};

// Upper unitriangular 3x3 matrices over GF(p): (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy').
struct HeisenbergRule final : MultiplicationRule {
  std::uint32_t p;
  explicit HeisenbergRule(std::uint32_t p_) : p(p_) {}
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override {
    const std::uint32_t ax = a / (p * p), ay = a / p % p, az = a % p;
    const std::uint32_t bx = b / (p * p), by = b / p % p, bz = b % p;
    const std::uint32_t x = (ax + bx) % p, y = (ay + by) % p, z = (az + bz + ax * by) % p;
    return (x * p + y) * p + z;
  }
  std::string label(std::uint32_t g) const override {
    return "(" + std::to_string(g / (p * p)) + "," + std::to_string(g / p % p) + "," +
           std::to_string(g % p) + ")";
  }
};

// Mixed-radix tuples, first factor most significant.
struct ProductRule final : MultiplicationRule {
  std::vector<FiniteGroup> factors;
  std::vector<std::uint32_t> strides;
  explicit ProductRule(std::vector<FiniteGroup> fs) : factors(std::move(fs)) {
    strides.assign(factors.size(), 1);
    for (std::size_t i = factors.size(); i-- > 1;) {
      strides[i - 1] = strides[i] * static_cast<std::uint32_t>(factors[i].order());
    }
  }
  std::uint32_t component(std::uint32_t g, std::size_t i) const {
    return g / strides[i] % static_cast<std::uint32_t>(factors[i].order());
  }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      r += factors[i].multiply(component(a, i), component(b, i)) * strides[i];
    }
    return r;
  }
  std::string label(std::uint32_t g) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out += (i ? "," : "") + factors[i].label(component(g, i));
    }
    return out + ")";
  }
};

struct PermutationRule final : MultiplicationRule {
  const FiniteGroup::State* state = nullptr;
  std::vector<std::string> labels;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override {
    return state->perm_index.at(state->permutations[a] * state->permutations[b]);
  }
  std::string label(std::uint32_t g) const override {
    if (!labels.empty()) return labels[g];
    return state->permutations[g].to_cycle_string(1);
  }
};

// Orders, inverses and cyclic classes from one power enumeration per cyclic subgroup.
inline void fill_cyclic_structure(FiniteGroup::State& s) {
  const auto n = s.order;
  const auto mul = [&](std::uint32_t a, std::uint32_t b) {
    if (!s.table.empty()) return s.table[static_cast<std::size_t>(a) * n + b];
    return s.rule->multiply(a, b);
  };
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  s.orders.assign(n, 0);
  s.inverse.assign(n, 0);
  s.class_of.assign(n, unset);
  s.class_offsets = {0};
  s.member_offsets = {0};
  std::vector<std::uint32_t> pw;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (s.class_of[g] != unset) continue;
    pw.assign(1, 0);
    for (std::uint32_t x = g; x != 0; x = mul(x, g)) {
      pw.push_back(x);
      if (pw.size() > n) throw std::logic_error("FiniteGroup: multiplication is not a group law");
    }
    const auto m = static_cast<std::uint32_t>(pw.size());
    const auto c = static_cast<std::uint32_t>(s.class_offsets.size() - 1);
    std::vector<std::uint32_t> gens;
    for (std::uint32_t k = 0; k < m; ++k) {
      const auto x = pw[k];
      if (s.orders[x] == 0) {
        s.orders[x] = m / std::gcd(k, m);
        s.inverse[x] = pw[(m - k) % m];
      }
      if (std::gcd(k, m) == 1) {
        gens.push_back(x);
        s.class_of[x] = c;
      }
    }
    std::sort(gens.begin(), gens.end());
    std::sort(pw.begin(), pw.end());
    s.subgroups.insert(s.subgroups.end(), pw.begin(), pw.end());
    s.class_offsets.push_back(s.subgroups.size());
    s.members.insert(s.members.end(), gens.begin(), gens.end());
    s.member_offsets.push_back(s.members.size());
  }
}

inline FiniteGroup finish(std::shared_ptr<FiniteGroup::State> s) {
  fill_cyclic_structure(*s);
  return FiniteGroup(std::move(s));
}

inline FiniteGroup from_rule(GroupSpec spec, std::size_t order,
                             std::shared_ptr<const MultiplicationRule> rule) {
  auto s = std::make_shared<FiniteGroup::State>();
  s->spec = std::move(spec);
  s->order = order;
  s->rule = std::move(rule);
  return finish(std::move(s));
}

inline void check_cap(std::uint64_t order, std::uint64_t cap, const std::string& what) {
  if (order > cap) {
    throw OrderCapError(what + " has order " + std::to_string(order) + ", above the cap " +
                        std::to_string(cap));
  }
}

}  // namespace detail

/// Wraps a set of permutations closed under composition. The identity is
/// moved to index 0; the rest keep their relative order.
inline FiniteGroup permutation_group(GroupSpec spec, std::vector<Permutation> elements,
                                     std::vector<std::string> labels = {}) {
  if (elements.empty()) throw std::invalid_argument("permutation_group: no elements");
  const auto id = std::find_if(elements.begin(), elements.end(),
                               [](const Permutation& p) { return p.is_identity(); });
  if (id == elements.end()) throw std::invalid_argument("permutation_group: identity missing");
  const auto id_pos = static_cast<std::size_t>(id - elements.begin());
  std::rotate(elements.begin(), id, id + 1);
  if (!labels.empty()) std::rotate(labels.begin(), labels.begin() + id_pos, labels.begin() + id_pos + 1);

  auto s = std::make_shared<FiniteGroup::State>();
  s->spec = std::move(spec);
  s->order = elements.size();
  s->permutations = std::move(elements);
  s->perm_index.reserve(s->order);
  for (std::uint32_t i = 0; i < s->order; ++i) {
    if (!s->perm_index.emplace(s->permutations[i], i).second) {
      throw std::invalid_argument("permutation_group: duplicate element");
    }
  }
  auto rule = std::make_shared<detail::PermutationRule>();
  rule->state = s.get();
  rule->labels = std::move(labels);
  s->rule = rule;
  if (s->order <= table_order_limit) {
    s->table.resize(s->order * s->order);
    for (std::uint32_t a = 0; a < s->order; ++a) {
      for (std::uint32_t b = 0; b < s->order; ++b) {
        const auto it = s->perm_index.find(s->permutations[a] * s->permutations[b]);
        if (it == s->perm_index.end()) {
          throw std::invalid_argument("permutation_group: not closed under composition");
        }
        s->table[a * s->order + b] = it->second;
      }
    }
  }
  return detail::finish(std::move(s));
}

inline FiniteGroup symmetric_group(std::uint32_t n) {
  std::vector<Permutation> perms;
  Permutation::point deg = static_cast<Permutation::point>(n);
  std::vector<Permutation::point> img(deg);
  std::iota(img.begin(), img.end(), Permutation::point{0});
  do {
    perms.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return permutation_group(GroupSpec::symmetric(n), std::move(perms));
}

inline FiniteGroup alternating_group(std::uint32_t n) {
  std::vector<Permutation> perms;
  std::vector<Permutation::point> img(n);
  std::iota(img.begin(), img.end(), Permutation::point{0});
  do {
    Permutation p(img);
    if (p.is_even()) perms.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return permutation_group(GroupSpec::alternating(n), std::move(perms));
}

/// PSL(2,q) as the permutation group induced by SL(2,q) on the q+1 points of
/// the projective line; point x < q is (x:1) and point q is infinity.
inline FiniteGroup psl2_group(std::uint32_t q) {
  const FiniteField f(q);
  using fe = FiniteField::element;
  const auto infinity = static_cast<Permutation::point>(q);
  const auto act = [&](fe a, fe b, fe c, fe d) {
    std::vector<Permutation::point> img(q + 1);
    for (fe x = 0; x < q; ++x) {
      const auto den = f.add(f.mul(c, x), d);
      img[x] = den == 0 ? infinity
                        : static_cast<Permutation::point>(f.div(f.add(f.mul(a, x), b), den));
    }
    img[q] = c == 0 ? infinity : static_cast<Permutation::point>(f.div(a, c));
    return Permutation(std::move(img));
  };
  std::map<Permutation, std::string> found;
  const auto record = [&](fe a, fe b, fe c, fe d) {
    found.emplace(act(a, b, c, d), "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
                                       std::to_string(c) + "," + std::to_string(d) + "]]");
  };
  for (fe a = 0; a < q; ++a) {
    for (fe b = 0; b < q; ++b) {
      for (fe c = 0; c < q; ++c) {
        if (a != 0) {
          record(a, b, c, f.div(f.add(1, f.mul(b, c)), a));  // ad - bc = 1
        } else if (b != 0 && c == f.neg(f.inv(b))) {
          for (fe d = 0; d < q; ++d) record(a, b, c, d);
        }
      }
    }
  }
  std::vector<Permutation> perms;
  std::vector<std::string> labels;
  for (auto& [p, l] : found) {
    perms.push_back(p);
    labels.push_back(l);
  }
  return permutation_group(GroupSpec::psl2(q), std::move(perms), std::move(labels));
}

inline FiniteGroup direct_product(const std::vector<FiniteGroup>& factors,
                                  std::uint64_t cap = default_order_cap) {
  if (factors.empty()) throw std::invalid_argument("direct_product: no factors");
  std::uint64_t order = 1;
  std::vector<GroupSpec> specs;
  for (const auto& f : factors) {
    order = detail::saturating_mul(order, f.order());
    specs.push_back(f.spec());
  }
  auto spec = GroupSpec::product(specs);
  detail::check_cap(order, cap, to_string(spec));
  return detail::from_rule(std::move(spec), order, std::make_shared<detail::ProductRule>(factors));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::uint64_t cap = default_order_cap) {
  return direct_product(std::vector<FiniteGroup>{a, b}, cap);
}

/// Throws OrderCapError when the order exceeds `cap`, SpecError for unsupported specs.
inline FiniteGroup build_group(const GroupSpec& spec, std::uint64_t cap = default_order_cap) {
  const auto order = spec_order(spec);
  detail::check_cap(order, cap, to_string(spec));
  const auto n32 = static_cast<std::uint32_t>(spec.n);
  switch (spec.family) {
    case Family::cyclic:
      return detail::from_rule(spec, order, std::make_shared<detail::CyclicRule>(n32));
    case Family::dihedral:
      return detail::from_rule(spec, order, std::make_shared<detail::DihedralRule>(n32));
    case Family::dicyclic:
      return detail::from_rule(spec, order, std::make_shared<detail::DicyclicRule>(n32));
    case Family::elementary_abelian:
      return detail::from_rule(spec, order,
                               std::make_shared<detail::ElementaryAbelianRule>(n32, spec.k));
    case Family::heisenberg:
      if (spec.n % 2 == 0 || !is_prime(spec.n)) throw SpecError("Heis<p> requires an odd prime");
      return detail::from_rule(spec, order, std::make_shared<detail::HeisenbergRule>(n32));
    case Family::symmetric:
      return symmetric_group(n32);
    case Family::alternating:
      return alternating_group(n32);
    case Family::psl2:
      return psl2_group(n32);
    case Family::product: {
      std::vector<FiniteGroup> parts;
      for (const auto& f : spec.factors) parts.push_back(build_group(f, cap));
      return direct_product(parts, cap);
    }
  }
  throw SpecError("unsupported group spec");
}

inline FiniteGroup build_group(std::string_view text, std::uint64_t cap = default_order_cap) {
  return build_group(parse_group_spec(text), cap);
}

// ---------------------------------------------------------------------------
// Queries

inline std::uint32_t element_order(const FiniteGroup& g, FiniteGroup::element x) {
  return g.element_order(x);
}

inline std::span<const FiniteGroup::element> powers_of(const FiniteGroup& g, FiniteGroup::element x) {
  return g.powers_of(x);
}

/// lcm of all element orders.
inline std::uint64_t group_exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (auto o : g.element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

inline bool is_cyclic(const FiniteGroup& g) {
  const auto orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

inline bool is_abelian(const FiniteGroup& g) {
  if (g.spec().family == Family::product) {
    // Componentwise; cheaper than the quadratic scan for large products.
    bool all = true;
    for (const auto& f : g.spec().factors) {
      if (f.family != Family::cyclic && f.family != Family::elementary_abelian) all = false;
    }
    if (all) return true;
  }
  for (FiniteGroup::element a = 0; a < g.order(); ++a) {
    for (FiniteGroup::element b = a + 1; b < g.order(); ++b) {
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  }
  return true;
}

/// Elements whose order is a power of p, identity included. Throws for non-prime p.
inline std::vector<FiniteGroup::element> sylow_p_elements(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_p_elements: p must be prime");
  std::vector<FiniteGroup::element> out;
  const auto orders = g.element_orders();
  for (FiniteGroup::element x = 0; x < g.order(); ++x) {
    if (p_part(orders[x], p) == orders[x]) out.push_back(x);
  }
  return out;
}

/// Every Sylow subgroup is normal: the p-elements number exactly the p-part
/// of |G| for each prime p (more would mean several Sylow p-subgroups).
inline bool is_nilpotent(const FiniteGroup& g) {
  for (auto p : prime_divisors(g.order())) {
    if (sylow_p_elements(g, p).size() != p_part(g.order(), p)) return false;
  }
  return true;
}

/// Count of elements of each order.
inline std::map<std::uint32_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::uint32_t, std::size_t> h;
  for (auto o : g.element_orders()) ++h[o];
  return h;
}

/// Whether the subgroup generated by u and v is cyclic, by closing {u, v}
/// under multiplication inside g.
inline bool closure_is_cyclic(const FiniteGroup& g, FiniteGroup::element u, FiniteGroup::element v) {
  std::vector<bool> in(g.order(), false);
  std::vector<FiniteGroup::element> members{FiniteGroup::identity()};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : {u, v}) {
      const auto y = g.multiply(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  for (auto x : members) {
    if (g.element_order(x) == members.size()) return true;
  }
  return false;
}

/// Identity, inverse and associativity axioms. Associativity is checked on
/// all triples when order <= exhaustive_limit, else on `samples` random triples.
inline bool check_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit = 200,
                               std::size_t samples = 10000, std::uint64_t seed = 1) {
  const auto n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t x = 0; x < n; ++x) {
    if (g.multiply(0, x) != x || g.multiply(x, 0) != x) return false;
    if (g.multiply(x, g.inverse(x)) != 0 || g.multiply(g.inverse(x), x) != 0) return false;
  }
  const auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c));
  };
  if (n <= exhaustive_limit) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

}  // namespace powergraph
