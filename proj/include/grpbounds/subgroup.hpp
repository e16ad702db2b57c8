#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grpbounds/bitset.hpp"
#include "grpbounds/group.hpp"

namespace grpbounds {

/// A subgroup of an ambient Group, stored as a membership bitset over the
/// ambient element ids together with a small generating list.
///
/// Holds a non-owning pointer to the ambient group, which must outlive it.
class SubgroupSet {
 public:
  SubgroupSet(const Group& ambient, Bitset members, std::vector<ElementId> gens)
      : ambient_(&ambient), members_(std::move(members)), gens_(std::move(gens)), order_(members_.count()) {}

  const Group& ambient() const noexcept { return *ambient_; }
  const Bitset& members() const noexcept { return members_; }
  const std::vector<ElementId>& gens() const noexcept { return gens_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(ElementId x) const { return members_.test(x); }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == ambient_->order(); }

  std::vector<ElementId> elements() const { return members_.to_vector(); }

  bool is_subgroup_of(const SubgroupSet& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.ambient_ == b.ambient_ && a.members_ == b.members_;
  }

 private:
  const Group* ambient_;
  Bitset members_;
  std::vector<ElementId> gens_;
  std::size_t order_;
};

/// Incremental subgroup closure. Each extension adds whole right cosets of
/// the current subgroup, so the cost is linear in the size of the result.
class Closure {
 public:
  explicit Closure(const Group& g) : group_(&g), members_(g.order()), list_{kIdentity} { members_.set(kIdentity); }

  Closure(const Group& g, const SubgroupSet& start)
      : group_(&g), members_(start.members()), list_(start.elements()), gens_(start.gens()) {}

  bool contains(ElementId x) const { return members_.test(x); }
  std::size_t size() const noexcept { return list_.size(); }

  /// Adds x to the generators unless it already lies in the subgroup.
  /// Returns true if the subgroup grew.
  bool add(ElementId x) {
    if (members_.test(x)) return false;
    gens_.push_back(x);
    const std::vector<ElementId> base = list_;
    std::vector<ElementId> reps{kIdentity};
    add_coset(base, x);
    reps.push_back(x);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (auto g : gens_) {
        const ElementId y = group_->mul(reps[i], g);
        if (!members_.test(y)) {
          add_coset(base, y);
          reps.push_back(y);
        }
      }
    }
    return true;
  }

  void add_all(std::span<const ElementId> xs) {
    for (auto x : xs) add(x);
  }

  SubgroupSet result() const { return SubgroupSet(*group_, members_, gens_); }
  const Bitset& members() const noexcept { return members_; }

 private:
  void add_coset(const std::vector<ElementId>& base, ElementId y) {
    for (auto h : base) {
      const ElementId z = group_->mul(h, y);
      members_.set(z);
      list_.push_back(z);
    }
  }

  const Group* group_;
  Bitset members_;
  std::vector<ElementId> list_;
  std::vector<ElementId> gens_;
};

inline SubgroupSet trivial_subgroup(const Group& g) { return Closure(g).result(); }

inline SubgroupSet whole_group(const Group& g) {
  Closure c(g);
  c.add_all(g.generator_ids());
  return c.result();
}

/// Least subgroup containing `ids`. The generators are the greedy irredundant
/// subsequence of `ids`.
inline SubgroupSet span(std::span<const ElementId> ids, const Group& g) {
  Closure c(g);
  c.add_all(ids);
  return c.result();
}

inline SubgroupSet span(std::initializer_list<ElementId> ids, const Group& g) {
  return span(std::span<const ElementId>(ids.begin(), ids.size()), g);
}

/// Subgroup generated by H together with the extra elements.
inline SubgroupSet join(const SubgroupSet& h, std::span<const ElementId> extra) {
  Closure c(h.ambient(), h);
  c.add_all(extra);
  return c.result();
}

inline SubgroupSet join(const SubgroupSet& a, const SubgroupSet& b) { return join(a, b.gens()); }

/// Subgroups sorted by order, then lexicographically by member list.
inline bool subgroup_less(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return lex_less(a.members(), b.members());
}

/// True iff conjugating each generator of H by each of `conjugators` stays in H.
inline bool normalizes(std::span<const ElementId> conjugators, const SubgroupSet& h) {
  const Group& g = h.ambient();
  for (auto x : conjugators) {
    for (auto k : h.gens()) {
      if (!h.contains(g.conjugate(k, x))) return false;
    }
  }
  return true;
}

/// Normal in the ambient group.
inline bool is_normal(const SubgroupSet& h) { return normalizes(h.ambient().generator_ids(), h); }

/// Normal in `parent` (h must be contained in parent).
inline bool is_normal_in(const SubgroupSet& h, const SubgroupSet& parent) { return normalizes(parent.gens(), h); }

/// |N U| computed as |N||U| / |N ∩ U|.
inline std::size_t product_order(const SubgroupSet& n, const SubgroupSet& u) {
  return n.order() * u.order() / n.members().intersection_count(u.members());
}

}  // namespace grpbounds
