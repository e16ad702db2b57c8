#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "grpbounds/invariants.hpp"

namespace grpbounds {

inline constexpr std::size_t kIsoOrderLimit = 256;

/// The subgroup as a group in its own right (same degree as the ambient).
inline Group subgroup_as_group(const SubgroupSet& h, std::size_t cap = kDefaultCap) {
  const Group& g = h.ambient();
  std::vector<Perm> gens;
  for (auto x : h.gens()) gens.push_back(g.element(x));
  if (gens.empty()) gens.emplace_back(g.degree());
  return Group::enumerate(gens, cap);
}

namespace detail {

inline SubgroupSet center(const Group& g) {
  std::vector<ElementId> central;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto s : g.generator_ids()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) central.push_back(x);
  }
  return span(central, g);
}

/// Isomorphism invariants compared before any search.
struct IsoFingerprint {
  std::size_t order = 0;
  std::vector<std::uint64_t> element_orders;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::optional<int> nilpotency_class;
  std::vector<std::uint64_t> abelianization_orders;

  bool operator==(const IsoFingerprint&) const = default;
};

inline IsoFingerprint fingerprint(const Group& g) {
  IsoFingerprint f;
  f.order = g.order();
  f.element_orders = g.element_orders();
  std::sort(f.element_orders.begin(), f.element_orders.end());
  f.center_order = center(g).order();
  const SubgroupSet derived = derived_subgroup(g);
  f.derived_order = derived.order();
  f.nilpotency_class = nilpotency_class(g);
  // orders of cosets x G' in G/G' determine the abelianization
  for (ElementId x = 0; x < g.order(); ++x) {
    std::uint64_t k = 1;
    for (ElementId y = x; !derived.contains(y); y = g.mul(y, x)) ++k;
    f.abelianization_orders.push_back(k);
  }
  std::sort(f.abelianization_orders.begin(), f.abelianization_orders.end());
  return f;
}

/// Greedy irredundant generating sequence, smallest element id first.
inline std::vector<ElementId> greedy_generators(const Group& g) {
  Closure c(g);
  std::vector<ElementId> gens;
  for (ElementId x = 0; x < g.order() && c.size() < g.order(); ++x) {
    if (c.add(x)) gens.push_back(x);
  }
  return gens;
}

class IsoSearch {
 public:
  IsoSearch(const Group& a, const Group& b) : a_(a), b_(b), gens_(greedy_generators(a)) {
    // spanning trees of <g_1..g_k> for each prefix length k
    for (std::size_t k = 1; k <= gens_.size(); ++k) {
      Tree t;
      t.parent.assign(a.order(), kUnreached);
      t.via.assign(a.order(), 0);
      t.order.push_back(kIdentity);
      t.parent[kIdentity] = kIdentity;
      for (std::size_t i = 0; i < t.order.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const ElementId y = a.mul(t.order[i], gens_[j]);
          if (t.parent[y] == kUnreached) {
            t.parent[y] = t.order[i];
            t.via[y] = j;
            t.order.push_back(y);
          }
        }
      }
      trees_.push_back(std::move(t));
    }
    images_.resize(gens_.size());
  }

  bool run() { return gens_.empty() ? b_.order() == 1 : extend(0); }

 private:
  static constexpr ElementId kUnreached = ~ElementId{0};

  struct Tree {
    std::vector<ElementId> order;
    std::vector<ElementId> parent;
    std::vector<std::size_t> via;
  };

  bool extend(std::size_t depth) {
    const auto want = a_.element_order(gens_[depth]);
    for (ElementId cand = 0; cand < b_.order(); ++cand) {
      if (b_.element_order(cand) != want) continue;
      images_[depth] = cand;
      if (!consistent(depth + 1)) continue;
      if (depth + 1 == gens_.size()) return true;
      if (extend(depth + 1)) return true;
    }
    return false;
  }

  /// Checks that the first k generator images define an injective
  /// homomorphism on <g_1..g_k>; for k = all this is an isomorphism.
  bool consistent(std::size_t k) {
    const Tree& t = trees_[k - 1];
    std::vector<ElementId> phi(a_.order(), kUnreached);
    std::vector<bool> used(b_.order(), false);
    phi[kIdentity] = kIdentity;
    used[kIdentity] = true;
    for (std::size_t i = 1; i < t.order.size(); ++i) {
      const ElementId x = t.order[i];
      const ElementId img = b_.mul(phi[t.parent[x]], images_[t.via[x]]);
      if (used[img]) return false;
      used[img] = true;
      phi[x] = img;
    }
    for (auto x : t.order) {
      for (std::size_t j = 0; j < k; ++j) {
        if (phi[a_.mul(x, gens_[j])] != b_.mul(phi[x], images_[j])) return false;
      }
    }
    return true;
  }

  const Group& a_;
  const Group& b_;
  std::vector<ElementId> gens_;
  std::vector<Tree> trees_;
  std::vector<ElementId> images_;
};

}  // namespace detail

/// Invariant prefilter followed by backtracking over generator images.
inline bool is_isomorphic(const Group& a, const Group& b, std::size_t max_order = kIsoOrderLimit) {
  if (a.order() > max_order || b.order() > max_order) {
    throw CapExceeded("isomorphism test limited to order " + std::to_string(max_order));
  }
  if (a.order() != b.order()) return false;
  if (!(detail::fingerprint(a) == detail::fingerprint(b))) return false;
  return detail::IsoSearch(a, b).run();
}

}  // namespace grpbounds
