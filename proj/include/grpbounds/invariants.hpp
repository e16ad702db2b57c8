#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grpbounds/lattice.hpp"
#include "grpbounds/subgroup.hpp"

namespace grpbounds {

/// Positive divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// p if n = p^k for a prime p and k >= 1.
inline std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

inline std::uint64_t exponent(const SubgroupSet& h) {
  std::uint64_t e = 1;
  const auto& orders = h.ambient().element_orders();
  h.members().for_each([&](std::size_t x) { e = std::lcm(e, orders[x]); });
  return e;
}

inline std::uint64_t exponent(const Group& g) { return exponent(whole_group(g)); }

/// Generator exponent: the least lcm of element orders over generating sets.
///
/// A generating set whose orders have lcm L lies inside S_L = {x : ord x | L},
/// so S_L generates; conversely if S_e generates then ge <= e. Every such L
/// divides exp, hence ge is the smallest divisor e of exp with <S_e> = H.
inline std::uint64_t generator_exponent(const SubgroupSet& h) {
  const Group& g = h.ambient();
  const auto elems = h.elements();
  for (auto e : divisors(exponent(h))) {
    Closure c(g);
    for (auto x : elems) {
      if (e % g.element_order(x) == 0) c.add(x);
      if (c.size() == h.order()) return e;
    }
  }
  return exponent(h);
}

inline std::uint64_t generator_exponent(const Group& g) { return generator_exponent(whole_group(g)); }

/// Subgroup generated by { [a,b] : a in A, b in B }.
inline SubgroupSet commutator_subgroup(const SubgroupSet& a, const SubgroupSet& b) {
  const Group& g = a.ambient();
  const auto as = a.elements();
  const auto bs = b.elements();
  Bitset values(g.order());
  for (auto x : as) {
    for (auto y : bs) values.set(g.commutator(x, y));
  }
  return span(values.to_vector(), g);
}

/// [H,H], spanned by all pairwise commutators of members.
inline SubgroupSet derived_subgroup(const SubgroupSet& h) { return commutator_subgroup(h, h); }
inline SubgroupSet derived_subgroup(const Group& g) { return derived_subgroup(whole_group(g)); }

/// H = H_1 >= H_2 >= ... with H_d = [H, H_{d-1}]; stops at the first term
/// that is trivial or equal to its predecessor (the repeated term is kept).
inline std::vector<SubgroupSet> lower_central_series(const SubgroupSet& h) {
  std::vector<SubgroupSet> series{h};
  while (!series.back().is_trivial()) {
    SubgroupSet next = commutator_subgroup(h, series.back());
    const bool stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

inline std::vector<SubgroupSet> lower_central_series(const Group& g) { return lower_central_series(whole_group(g)); }

/// Least c with H_{c+1} = 1, or nullopt when H is not nilpotent.
inline std::optional<int> nilpotency_class(const SubgroupSet& h) {
  const auto series = lower_central_series(h);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

inline std::optional<int> nilpotency_class(const Group& g) { return nilpotency_class(whole_group(g)); }

inline bool is_nilpotent(const SubgroupSet& h) {
  if (h.order() == 1 || prime_power_base(h.order())) return true;
  return nilpotency_class(h).has_value();
}

inline bool is_solvable(const SubgroupSet& h) {
  SubgroupSet cur = h;
  while (!cur.is_trivial()) {
    SubgroupSet next = derived_subgroup(cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

inline bool is_solvable(const Group& g) { return is_solvable(whole_group(g)); }

/// Regularity in the single-element form: for every a, b there is c in
/// <a,b>' with a^p b^p = (ab)^p c^p. Brute force over <a,b>'.
inline bool is_regular(const SubgroupSet& h, std::uint64_t p) {
  if (h.order() != 1 && prime_power_base(h.order()) != p) {
    throw InvalidArgument("regularity is defined for p-groups only");
  }
  const Group& g = h.ambient();
  const auto pp = static_cast<std::int64_t>(p);
  const auto elems = h.elements();
  // <a,b> -> p-th powers of its derived subgroup
  std::unordered_map<Bitset, Bitset, BitsetHash> derived_powers;
  for (auto a : elems) {
    for (auto b : elems) {
      const ElementId lhs = g.mul(g.pow(a, pp), g.pow(b, pp));
      const ElementId target = g.mul(g.inv(g.pow(g.mul(a, b), pp)), lhs);
      if (target == kIdentity) continue;
      const SubgroupSet ab = span({a, b}, g);
      auto it = derived_powers.find(ab.members());
      if (it == derived_powers.end()) {
        Bitset powers(g.order());
        derived_subgroup(ab).members().for_each([&](std::size_t c) { powers.set(g.pow(static_cast<ElementId>(c), pp)); });
        it = derived_powers.emplace(ab.members(), std::move(powers)).first;
      }
      if (!it->second.test(target)) return false;
    }
  }
  return true;
}

inline bool is_regular(const Group& g, std::uint64_t p) { return is_regular(whole_group(g), p); }

/// Subgroup spanned by all weight-i commutators in a and b, over all pairs
/// (a, b) of H. Weight 1 is {a, b}; weight i collects [x, y] with x of
/// weight j and y of weight i - j.
inline SubgroupSet weight_commutator_subgroup(const SubgroupSet& h, int weight) {
  if (weight < 1) throw InvalidArgument("commutator weight must be at least 1");
  const Group& g = h.ambient();
  if (weight == 1) return h;
  const auto elems = h.elements();
  Bitset all(g.order());
  std::vector<std::vector<ElementId>> by_weight(static_cast<std::size_t>(weight) + 1);
  for (auto a : elems) {
    for (auto b : elems) {
      by_weight[1] = {a};
      if (b != a) by_weight[1].push_back(b);
      for (int i = 2; i <= weight; ++i) {
        Bitset level(g.order());
        for (int j = 1; j < i; ++j) {
          for (auto x : by_weight[static_cast<std::size_t>(j)]) {
            for (auto y : by_weight[static_cast<std::size_t>(i - j)]) level.set(g.commutator(x, y));
          }
        }
        by_weight[static_cast<std::size_t>(i)] = level.to_vector();
      }
      for (auto x : by_weight[static_cast<std::size_t>(weight)]) all.set(x);
    }
  }
  return span(all.to_vector(), g);
}

inline SubgroupSet weight_commutator_subgroup(const Group& g, int weight) {
  return weight_commutator_subgroup(whole_group(g), weight);
}

struct InvariantReport {
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t generator_exponent = 0;
  std::optional<int> nilpotency_class;  // nullopt: not nilpotent
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::optional<std::uint64_t> prime;  // set for prime-power order
  std::optional<bool> is_regular;      // set for prime-power order
  std::uint64_t exp_derived = 0;
};

inline InvariantReport invariant_report(const Group& g) {
  const SubgroupSet whole = whole_group(g);
  InvariantReport r;
  r.order = g.order();
  r.exponent = exponent(whole);
  r.generator_exponent = generator_exponent(whole);
  r.nilpotency_class = nilpotency_class(whole);
  r.is_nilpotent = r.nilpotency_class.has_value();
  r.is_solvable = is_solvable(whole);
  r.prime = prime_power_base(g.order());
  if (r.prime) r.is_regular = is_regular(whole, *r.prime);
  r.exp_derived = exponent(derived_subgroup(whole));
  return r;
}

/// Largest nilpotent normal subgroup: the join of all nilpotent normal subgroups.
inline SubgroupSet fitting(const Group& g) {
  SubgroupSet f = trivial_subgroup(g);
  for (const auto& n : normal_subgroups(g)) {
    if (!n.is_subgroup_of(f) && is_nilpotent(n)) f = join(f, n);
  }
  return f;
}

}  // namespace grpbounds
