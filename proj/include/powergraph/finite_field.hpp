// Arithmetic in GF(p^e) by polynomials modulo the lexicographically least
// monic irreducible of degree e. Elements are encoded as integers whose
// base-p digits are the polynomial coefficients (constant term first).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "powergraph/number_theory.hpp"

namespace powergraph {

class FiniteField {
 public:
  using element = std::uint32_t;

  /// Throws std::invalid_argument unless q is a prime power.
  explicit FiniteField(std::uint64_t q) {
    const auto pp = is_prime_power(q);
    if (!pp) throw std::invalid_argument("FiniteField: order must be a prime power");
    if (q > 2048) throw std::invalid_argument("FiniteField: order too large");
    p_ = static_cast<std::uint32_t>(pp->prime);
    e_ = pp->exponent;
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = find_modulus();
    build_tables();
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t size() const noexcept { return q_; }

  /// Coefficients c_0..c_e of the defining polynomial (c_e == 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  element add(element a, element b) const { return add_[a * q_ + b]; }
  element sub(element a, element b) const { return add(a, neg_[b]); }
  element mul(element a, element b) const { return mul_[a * q_ + b]; }
  element neg(element a) const { return neg_[a]; }

  /// Throws std::domain_error for zero.
  element inv(element a) const {
    if (a == 0) throw std::domain_error("FiniteField: zero has no inverse");
    return inv_[a];
  }

  element div(element a, element b) const { return mul(a, inv(b)); }

 private:
  using poly = std::vector<std::uint32_t>;

  poly digits(element x) const {
    poly c(e_);
    for (auto& d : c) {
      d = x % p_;
      x /= p_;
    }
    return c;
  }

  element encode(const poly& c) const {
    element x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p_ + c[i];
    return x;
  }

  // Remainder of a modulo the monic polynomial m (both coefficient lists).
  poly poly_mod(poly a, const poly& m) const {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
      const auto lead = a[i];
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= dm; ++j) {
        const auto sub = (lead * m[j]) % p_;
        auto& t = a[i - dm + j];
        t = (t + p_ - sub) % p_;
      }
    }
    a.resize(dm);
    return a;
  }

  // Monic polynomial of degree d whose lower coefficients are the base-p digits of k.
  poly monic(std::uint64_t k, std::uint32_t d) const {
    poly c(d + 1);
    for (std::uint32_t i = 0; i < d; ++i) {
      c[i] = static_cast<std::uint32_t>(k % p_);
      k /= p_;
    }
    c[d] = 1;
    return c;
  }

  bool irreducible(const poly& f) const {
    const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t dd = 1; 2 * dd <= d; ++dd) {
      const auto count = ipow(p_, dd);
      for (std::uint64_t k = 0; k < count; ++k) {
        const auto r = poly_mod(f, monic(k, dd));
        bool zero = true;
        for (auto c : r) zero = zero && c == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  // Candidates are ordered by their coefficient vectors read from the top
  // non-leading coefficient down, i.e. by the integer k in monic(k, e).
  poly find_modulus() const {
    if (e_ == 1) return {0, 1};
    const auto count = ipow(p_, e_);
    for (std::uint64_t k = 0; k < count; ++k) {
      auto f = monic(k, e_);
      if (irreducible(f)) return f;
    }
    throw std::logic_error("FiniteField: no irreducible polynomial found");
  }

  void build_tables() {
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    std::vector<poly> dig(q_);
    for (element a = 0; a < q_; ++a) dig[a] = digits(a);
    for (element a = 0; a < q_; ++a) {
      for (element b = 0; b < q_; ++b) {
        poly s(e_);
        for (std::uint32_t i = 0; i < e_; ++i) s[i] = (dig[a][i] + dig[b][i]) % p_;
        add_[a * q_ + b] = encode(s);
        poly prod(2 * e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i) {
          for (std::uint32_t j = 0; j < e_; ++j) {
            prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p_;
          }
        }
        mul_[a * q_ + b] = e_ == 1 ? prod[0] : encode(poly_mod(prod, modulus_));
      }
    }
    for (element a = 0; a < q_; ++a) {
      for (element b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0) neg_[a] = b;
        if (mul_[a * q_ + b] == 1) inv_[a] = b;
      }
    }
  }

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  poly modulus_;
  std::vector<element> add_, mul_, neg_, inv_;
};

}  // namespace powergraph
