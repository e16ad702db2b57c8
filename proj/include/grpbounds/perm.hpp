#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "grpbounds/error.hpp"

namespace grpbounds {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. images()[x] is the image of x.
class Perm {
 public:
  Perm() = default;

  /// Identity on `degree` points.
  explicit Perm(std::size_t degree) : images_(degree) {
    if (degree == 0) throw InvalidArgument("permutation degree must be at least 1");
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Takes 0-based images; throws InvalidArgument unless they form a bijection.
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.empty()) throw InvalidArgument("permutation degree must be at least 1");
    std::vector<bool> seen(images_.size(), false);
    for (auto y : images_) {
      if (y >= images_.size() || seen[y]) throw InvalidArgument("images do not form a bijection");
      seen[y] = true;
    }
  }

  /// Builds from cycles given as 0-based point lists, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
    Perm p(degree);
    for (const auto& cycle : cycles) {
      if (cycle.size() < 2) continue;
      const Point* first = cycle.begin();
      for (const Point* it = cycle.begin(); it != cycle.end(); ++it) {
        const Point* next = (it + 1 == cycle.end()) ? first : it + 1;
        if (*it >= degree || *next >= degree) throw InvalidArgument("cycle point out of range");
        p.images_[*it] = *next;
      }
    }
    return Perm(std::move(p.images_));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  /// lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (auto x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }

 private:
  friend Perm compose(const Perm& a, const Perm& b);
  std::vector<Point> images_;
};

/// compose(a, b) maps x to a(b(x)): the right factor is applied first.
/// Group products throughout the library use this convention, a*b := compose(a, b).
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  }
  Perm r;
  r.images_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) r.images_[x] = a.images_[b.images_[x]];
  return r;
}

inline Perm inverse(const Perm& p) { return p.inverse(); }

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : p.images()) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

}  // namespace grpbounds
