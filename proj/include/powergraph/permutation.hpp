// Permutations of {0, ..., n-1} stored as image arrays.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace powergraph {

class Permutation {
 public:
  using point = std::uint16_t;

  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree) : image_(degree) {
    std::iota(image_.begin(), image_.end(), point{0});
  }

  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<point> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto x : image_) {
      if (x >= image_.size() || seen[x]) {
        throw std::invalid_argument("Permutation: image is not a bijection");
      }
      seen[x] = true;
    }
  }

  /// The cycle (c0 c1 ... ck) on `degree` points.
  static Permutation cycle(std::size_t degree, std::span<const point> points) {
    Permutation p(degree);
    for (std::size_t i = 0; i < points.size(); ++i) {
      p.image_.at(points[i]) = points[(i + 1) % points.size()];
    }
    return Permutation(std::move(p.image_));
  }

  std::size_t degree() const noexcept { return image_.size(); }
  point operator()(point x) const { return image_[x]; }
  std::span<const point> images() const noexcept { return image_; }

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("Permutation: degree mismatch");
    }
    Permutation r;
    r.image_.resize(a.degree());
    for (std::size_t x = 0; x < a.degree(); ++x) r.image_[x] = a.image_[b.image_[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.image_.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x) r.image_[image_[x]] = static_cast<point>(x);
    return r;
  }

  bool is_identity() const noexcept {
    for (std::size_t x = 0; x < degree(); ++x) {
      if (image_[x] != x) return false;
    }
    return true;
  }

  /// Cycle lengths of non-trivial cycles, in order of their least point.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(degree(), false);
    for (std::size_t x = 0; x < degree(); ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (std::size_t y = x; !seen[y]; y = image_[y]) {
        seen[y] = true;
        ++len;
      }
      if (len > 1) lengths.push_back(len);
    }
    return lengths;
  }

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (auto len : cycle_type()) r = std::lcm(r, static_cast<std::uint64_t>(len));
    return r;
  }

  bool is_even() const {
    std::size_t transpositions = 0;
    for (auto len : cycle_type()) transpositions += len - 1;
    return transpositions % 2 == 0;
  }

  /// Cycle notation with points shifted by `offset`, e.g. "(1,2)(3,4,5)"; "()" for identity.
  std::string to_cycle_string(std::size_t offset = 1) const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t x = 0; x < degree(); ++x) {
      if (seen[x] || image_[x] == x) continue;
      out += '(';
      for (std::size_t y = x; !seen[y]; y = image_[y]) {
        seen[y] = true;
        if (y != x) out += ',';
        out += std::to_string(y + offset);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<point> image_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace powergraph
