// Integer helpers: factorization, Euler's phi, prime-power detection.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace powergraph {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

/// Prime factors of n with multiplicity, ascending. Trial division.
inline std::vector<std::uint64_t> factorize(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be at least 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Distinct prime divisors of n, ascending; empty for n == 1.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  if (n < 2) return {};
  auto f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint64_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

inline std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.front() != f.back()) return std::nullopt;
  return PrimePower{f.front(), static_cast<std::uint32_t>(f.size())};
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// True for 1, p^k, and p*q with p != q prime.
inline bool is_unit_prime_power_or_two_prime_product(std::uint64_t n) {
  if (n == 1) return true;
  const auto f = factorize(n);
  if (f.front() == f.back()) return true;
  return f.size() == 2;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace powergraph
