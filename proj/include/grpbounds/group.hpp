#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grpbounds/error.hpp"
#include "grpbounds/perm.hpp"

namespace grpbounds {

using ElementId = std::uint32_t;

inline constexpr ElementId kIdentity = 0;
inline constexpr std::size_t kDefaultCap = 100'000;

/// A fully enumerated finite permutation group.
///
/// Elements are numbered in breadth-first order from the identity (id 0),
/// applying the generators in the order given; the same generator list always
/// produces the same numbering. The group product is a*b := compose(a, b).
/// Immutable after construction.
class Group {
 public:
  /// Multiplication is table driven up to this order, hashed above it.
  static constexpr std::size_t kTableLimit = 2048;

  static Group enumerate(std::span<const Perm> gens, std::size_t cap = kDefaultCap) {
    if (gens.empty()) throw InvalidArgument("generator list is empty");
    const std::size_t degree = gens.front().degree();
    for (const auto& g : gens) {
      if (g.degree() != degree) throw DegreeMismatch("generators have different degrees");
    }

    Group grp;
    grp.degree_ = degree;
    grp.generators_.assign(gens.begin(), gens.end());
    grp.add(Perm(degree));
    for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
      for (const auto& g : grp.generators_) {
        Perm next = compose(grp.elements_[head], g);
        if (grp.index_.find(next) == grp.index_.end()) {
          if (grp.elements_.size() >= cap) {
            throw CapExceeded("group closure exceeds cap of " + std::to_string(cap) + " elements");
          }
          grp.add(std::move(next));
        }
      }
    }
    grp.finish();
    return grp;
  }

  static Group enumerate(std::initializer_list<Perm> gens, std::size_t cap = kDefaultCap) {
    return enumerate(std::span<const Perm>(gens.begin(), gens.size()), cap);
  }

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<ElementId>& generator_ids() const noexcept { return generator_ids_; }

  const Perm& element(ElementId id) const { return elements_[id]; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }

  std::optional<ElementId> find(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  ElementId mul(ElementId a, ElementId b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
    return index_.at(compose(elements_[a], elements_[b]));
  }

  ElementId inv(ElementId a) const { return inverses_[a]; }

  std::uint64_t element_order(ElementId a) const { return orders_[a]; }
  const std::vector<std::uint64_t>& element_orders() const noexcept { return orders_; }

  /// a^k for any integer k (negative powers via the inverse).
  ElementId pow(ElementId a, std::int64_t k) const {
    const auto ord = static_cast<std::int64_t>(orders_[a]);
    k %= ord;
    if (k < 0) k += ord;
    ElementId result = kIdentity;
    ElementId base = a;
    auto e = static_cast<std::uint64_t>(k);
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }

  /// [a,b] = a^-1 b^-1 a b.
  ElementId commutator(ElementId a, ElementId b) const { return mul(mul(mul(inv(a), inv(b)), a), b); }

  /// b^-1 a b.
  ElementId conjugate(ElementId a, ElementId b) const { return mul(mul(inv(b), a), b); }

  bool is_abelian() const {
    for (auto a : generator_ids_) {
      for (auto b : generator_ids_) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

 private:
  Group() = default;

  void add(Perm p) {
    index_.emplace(p, static_cast<ElementId>(elements_.size()));
    elements_.push_back(std::move(p));
  }

  void finish() {
    const std::size_t n = elements_.size();
    if (n <= kTableLimit) {
      table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          table_[a * n + b] = index_.at(compose(elements_[a], elements_[b]));
        }
      }
    }
    inverses_.resize(n);
    orders_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      inverses_[a] = index_.at(elements_[a].inverse());
      orders_[a] = elements_[a].order();
    }
    generator_ids_.reserve(generators_.size());
    for (const auto& g : generators_) generator_ids_.push_back(index_.at(g));
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, ElementId, PermHash> index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverses_;
  std::vector<std::uint64_t> orders_;
};

}  // namespace grpbounds
