#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "grpbounds/subgroup.hpp"

namespace grpbounds {

/// One representative element per cyclic subgroup, in ascending id order.
inline std::vector<ElementId> cyclic_generators(const Group& g) {
  std::vector<ElementId> reps;
  std::vector<bool> covered(g.order(), false);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    // every generator of <x> is x^k with gcd(k, ord x) = 1
    const auto ord = g.element_order(x);
    ElementId y = x;
    for (std::uint64_t k = 1; k <= ord; ++k) {
      if (std::gcd(k, ord) == 1) covered[y] = true;
      y = g.mul(y, x);
    }
  }
  return reps;
}

/// Every subgroup of g exactly once, sorted by (order, member list).
///
/// Closure search: start from the cyclic subgroups and repeatedly join each
/// subgroup found with one cyclic subgroup it does not contain.
inline std::vector<SubgroupSet> all_subgroups(const Group& g, std::size_t cap = kDefaultCap) {
  if (g.order() > cap) throw CapExceeded("group order exceeds cap for subgroup enumeration");
  const auto reps = cyclic_generators(g);

  std::vector<SubgroupSet> found;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto offer = [&](SubgroupSet s) {
    if (seen.insert(s.members()).second) found.push_back(std::move(s));
  };
  for (auto x : reps) offer(span({x}, g));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto x : reps) {
      if (found[i].contains(x)) continue;
      const ElementId extra[] = {x};
      offer(join(found[i], extra));
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

/// Conjugacy classes as sorted element lists, ordered by smallest member.
inline std::vector<std::vector<ElementId>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<ElementId>> classes;
  std::vector<bool> done(g.order(), false);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<ElementId> cls{x};
    done[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (auto s : g.generator_ids()) {
        const ElementId y = g.conjugate(cls[i], s);
        if (!done[y]) {
          done[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// All normal subgroups, as joins of normal closures of conjugacy classes.
inline std::vector<SubgroupSet> normal_subgroups(const Group& g) {
  std::vector<SubgroupSet> found;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto offer = [&](SubgroupSet s) {
    if (seen.insert(s.members()).second) found.push_back(std::move(s));
  };
  offer(trivial_subgroup(g));
  std::vector<SubgroupSet> closures;
  for (const auto& cls : conjugacy_classes(g)) {
    // the span of a union of classes is invariant under conjugation
    closures.push_back(span(cls, g));
    offer(closures.back());
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : closures) {
      if (c.is_subgroup_of(found[i])) continue;
      offer(join(found[i], c));
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

/// Proper subgroups U of the ambient group with N U = G.
inline std::vector<SubgroupSet> partial_complements(const Group& g, const SubgroupSet& n) {
  if (!is_normal(n)) throw InvalidArgument("partial complements require a normal subgroup");
  std::vector<SubgroupSet> out;
  for (auto& u : all_subgroups(g)) {
    if (!u.is_whole() && product_order(n, u) == g.order()) out.push_back(std::move(u));
  }
  return out;
}

/// Subgroup lattice of one group, computed once and shared read-only.
///
/// Subgroups are addressed by their index in the sorted list; index 0 is the
/// trivial subgroup and the last index is the whole group.
class Lattice {
 public:
  explicit Lattice(const Group& g, std::size_t cap = kDefaultCap) : group_(&g), subgroups_(all_subgroups(g, cap)) {
    index_.reserve(subgroups_.size());
    for (std::size_t i = 0; i < subgroups_.size(); ++i) index_.emplace(subgroups_[i].members(), i);
    below_.resize(subgroups_.size());
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      for (std::size_t j = 0; j < subgroups_.size() && subgroups_[j].order() <= subgroups_[i].order(); ++j) {
        if (subgroups_[i].order() % subgroups_[j].order() == 0 &&
            subgroups_[j].members().is_subset_of(subgroups_[i].members())) {
          below_[i].push_back(j);
        }
      }
    }
  }

  const Group& group() const noexcept { return *group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const SubgroupSet& operator[](std::size_t i) const { return subgroups_[i]; }
  const std::vector<SubgroupSet>& subgroups() const noexcept { return subgroups_; }
  std::size_t whole() const noexcept { return subgroups_.size() - 1; }

  std::size_t index_of(const Bitset& members) const { return index_.at(members); }
  std::size_t index_of(const SubgroupSet& h) const { return index_of(h.members()); }

  /// Indices of subgroups contained in subgroup i (including i), ascending.
  const std::vector<std::size_t>& below(std::size_t i) const { return below_[i]; }

  /// Indices of subgroups normal in subgroup i.
  std::vector<std::size_t> normal_in(std::size_t i) const {
    std::vector<std::size_t> out;
    for (auto j : below_[i]) {
      if (is_normal_in(subgroups_[j], subgroups_[i])) out.push_back(j);
    }
    return out;
  }

  /// Indices of proper subgroups U of subgroup h with N U = h.
  std::vector<std::size_t> partial_complements(std::size_t h, std::size_t n) const {
    std::vector<std::size_t> out;
    const auto& sub_h = subgroups_[h];
    const auto& sub_n = subgroups_[n];
    for (auto u : below_[h]) {
      if (u == h) continue;
      if (product_order(sub_n, subgroups_[u]) == sub_h.order()) out.push_back(u);
    }
    return out;
  }

 private:
  const Group* group_;
  std::vector<SubgroupSet> subgroups_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
  std::vector<std::vector<std::size_t>> below_;
};

}  // namespace grpbounds
