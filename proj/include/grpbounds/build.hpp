#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "grpbounds/group.hpp"
#include "grpbounds/invariants.hpp"

namespace grpbounds {

/// n-cycle on n points (identity on one point for n = 1).
inline Group cyclic(std::size_t n, std::size_t cap = kDefaultCap) {
  if (n < 1) throw InvalidArgument("cyclic group order must be at least 1");
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return Group::enumerate({Perm(std::move(images))}, cap);
}

/// Dihedral group of the given order 2m: rotation and reflection of an m-gon.
/// Orders 2 and 4 give the abelian groups C2 and C2 x C2.
inline Group dihedral(std::size_t order, std::size_t cap = kDefaultCap) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral group order must be even and at least 2");
  const std::size_t m = order / 2;
  if (m == 1) return Group::enumerate({Perm::from_cycles(2, {{0, 1}})}, cap);
  if (m == 2) return Group::enumerate({Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})}, cap);
  std::vector<Point> rot(m), refl(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<Point>((i + 1) % m);
    refl[i] = static_cast<Point>((m - i) % m);
  }
  return Group::enumerate({Perm(std::move(rot)), Perm(std::move(refl))}, cap);
}

/// (C_p)^k as k disjoint p-cycles on k*p points.
inline Group elementary_abelian(std::uint64_t p, std::size_t k, std::size_t cap = kDefaultCap) {
  if (prime_power_base(p) != p) throw InvalidArgument("elementary abelian group needs a prime p");
  if (k < 1) throw InvalidArgument("elementary abelian rank must be at least 1");
  const std::size_t degree = k * p;
  std::vector<Perm> gens;
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < p; ++i) images[b * p + i] = static_cast<Point>(b * p + (i + 1) % p);
    gens.emplace_back(std::move(images));
  }
  return Group::enumerate(gens, cap);
}

/// A x B acting on the disjoint union of the two point sets (A's points first).
inline Group direct_product(const Group& a, const Group& b, std::size_t cap = kDefaultCap) {
  if (a.order() * b.order() > cap) throw CapExceeded("direct product order exceeds cap");
  const std::size_t da = a.degree();
  const std::size_t degree = da + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i < da ? g(static_cast<Point>(i)) : i);
    gens.emplace_back(std::move(images));
  }
  for (const auto& h : b.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<Point>(i < da ? i : da + h(static_cast<Point>(i - da)));
    }
    gens.emplace_back(std::move(images));
  }
  return Group::enumerate(gens, cap);
}

/// G wr H with H acting on its natural n = deg H points: n blocks of deg G
/// points, point (block, x) = block * deg G + x. Generators: G's generators
/// on the smallest block of each H-orbit, then H's generators permuting the
/// blocks.
inline Group wreath(const Group& g, const Group& h, std::size_t cap = kDefaultCap) {
  const std::size_t dg = g.degree();
  const std::size_t n = h.degree();
  const std::size_t degree = dg * n;
  std::size_t expected = h.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (expected > cap / g.order()) throw CapExceeded("wreath product order exceeds cap");
    expected *= g.order();
  }
  std::vector<std::size_t> representatives;
  std::vector<bool> seen(n, false);
  for (std::size_t b = 0; b < n; ++b) {
    if (seen[b]) continue;
    representatives.push_back(b);
    std::vector<std::size_t> orbit{b};
    seen[b] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& y : h.generators()) {
        const std::size_t c = y(static_cast<Point>(orbit[k]));
        if (!seen[c]) {
          seen[c] = true;
          orbit.push_back(c);
        }
      }
    }
  }
  std::vector<Perm> gens;
  for (auto b : representatives) {
    for (const auto& x : g.generators()) {
      std::vector<Point> images(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        images[i] = static_cast<Point>(i / dg == b ? b * dg + x(static_cast<Point>(i % dg)) : i);
      }
      gens.emplace_back(std::move(images));
    }
  }
  for (const auto& y : h.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<Point>(y(static_cast<Point>(i / dg)) * dg + i % dg);
    }
    gens.emplace_back(std::move(images));
  }
  Group result = Group::enumerate(gens, cap);
  if (result.order() != expected) throw std::logic_error("wreath product enumeration disagrees with |G|^n |H|");
  return result;
}

}  // namespace grpbounds
