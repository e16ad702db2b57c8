#pragma once

// Brute-force reference implementations. They use only Group::mul / inv /
// order and plain element sets, never the library's closure, lattice or search.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "grpbounds/group.hpp"

namespace oracle {

using grpbounds::ElementId;
using grpbounds::Group;
using Set = std::vector<char>;  // membership flags indexed by element id

inline std::size_t count(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1)); }

inline std::vector<ElementId> members(const Set& s) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

/// Element order by repeated multiplication.
inline std::uint64_t order_of(const Group& g, ElementId x) {
  std::uint64_t k = 1;
  for (ElementId y = x; y != grpbounds::kIdentity; y = g.mul(y, x)) ++k;
  return k;
}

/// Smallest set containing the identity and closed under right multiplication by gens.
inline Set closure(const Group& g, const std::vector<ElementId>& gens) {
  Set s(g.order(), 0);
  std::vector<ElementId> queue{grpbounds::kIdentity};
  s[grpbounds::kIdentity] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto y : gens) {
      const ElementId z = g.mul(queue[i], y);
      if (!s[z]) {
        s[z] = 1;
        queue.push_back(z);
      }
    }
  }
  return s;
}

inline Set whole(const Group& g) { return Set(g.order(), 1); }

inline std::uint64_t exponent(const Group& g, const Set& h) {
  std::uint64_t e = 1;
  for (auto x : members(h)) e = std::lcm(e, order_of(g, x));
  return e;
}

/// Every subgroup, found by adjoining single elements to known subgroups until nothing new appears.
inline std::vector<Set> subgroups(const Group& g) {
  std::set<Set> seen;
  std::vector<Set> work{closure(g, {})};
  seen.insert(work.front());
  for (std::size_t i = 0; i < work.size(); ++i) {
    const auto base = members(work[i]);
    for (ElementId x = 0; x < g.order(); ++x) {
      if (work[i][x]) continue;
      auto gens = base;
      gens.push_back(x);
      Set s = closure(g, gens);
      if (seen.insert(s).second) work.push_back(std::move(s));
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool normal_in(const Group& g, const Set& n, const Set& parent) {
  for (auto x : members(parent)) {
    for (auto a : members(n)) {
      if (!n[g.conjugate(a, x)]) return false;
    }
  }
  return true;
}

inline Set commutator_span(const Group& g, const Set& a, const Set& b) {
  std::vector<ElementId> gens;
  for (auto x : members(a)) {
    for (auto y : members(b)) gens.push_back(g.commutator(x, y));
  }
  return closure(g, gens);
}

/// Lower central series of h up to the first trivial term, or up to and
/// including the first repeated term.
inline std::vector<Set> lower_central(const Group& g, const Set& h) {
  std::vector<Set> series{h};
  while (count(series.back()) != 1) {
    Set next = commutator_span(g, h, series.back());
    const bool stable = next == series.back();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

inline bool nilpotent(const Group& g, const Set& h) { return count(lower_central(g, h).back()) == 1; }

/// min lcm of element orders over generating subsets with at most max_size elements.
inline std::uint64_t ge_by_subsets(const Group& g, std::size_t max_size = 4) {
  const std::size_t n = g.order();
  if (n == 1) return 1;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<ElementId> pick;
  auto rec = [&](auto&& self, ElementId from, std::uint64_t l) -> void {
    if (!pick.empty() && count(closure(g, pick)) == n) {
      best = std::min(best, l);
      return;
    }
    if (pick.size() == max_size) return;
    for (ElementId x = from; x < n; ++x) {
      const std::uint64_t next = std::lcm(l, order_of(g, x));
      if (next >= best) continue;
      pick.push_back(x);
      self(self, x + 1, next);
      pick.pop_back();
    }
  };
  rec(rec, 1, 1);
  return best;
}

/// r(G) by enumerating every admissible series; only identical (H, accumulated lcm)
/// subproblems are shared.
class NaiveR {
 public:
  explicit NaiveR(const Group& g, bool share = true) : g_(g), subs_(subgroups(g)), share_(share) {}

  std::uint64_t value() { return best(whole(g_), 1); }
  std::uint64_t value(const Set& h) { return best(h, 1); }

  /// Number of (H, m) states visited; a rough cost measure.
  std::size_t visits() const { return visits_; }

 private:
  std::uint64_t best(const Set& h, std::uint64_t m) {
    if (count(h) == 1) return m;
    const auto key = std::make_pair(h, m);
    if (auto it = memo_.find(key); share_ && it != memo_.end()) return it->second;
    std::uint64_t result = std::numeric_limits<std::uint64_t>::max();
    const std::size_t order = count(h);
    for (const auto& n : subs_) {
      if (count(n) == 1 || !subset(n, h) || !normal_in(g_, n, h) || !nilpotent(g_, n)) continue;
      const std::uint64_t e = std::lcm(m, exponent(g_, n));
      for (const auto& u : subs_) {
        if (!subset(u, h) || count(u) == order) continue;
        std::size_t inter = 0;
        for (std::size_t i = 0; i < n.size(); ++i) inter += (n[i] && u[i]) ? 1 : 0;
        if (count(n) * count(u) != order * inter) continue;
        result = std::min(result, best(u, e));
      }
    }
    ++visits_;
    if (share_) memo_.emplace(key, result);
    return result;
  }

  const Group& g_;
  std::vector<Set> subs_;
  bool share_;
  std::size_t visits_ = 0;
  std::map<std::pair<Set, std::uint64_t>, std::uint64_t> memo_;
};

}  // namespace oracle
