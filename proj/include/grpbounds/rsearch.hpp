#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "grpbounds/invariants.hpp"
#include "grpbounds/lattice.hpp"

namespace grpbounds {

/// A known upper bound substituted for r(H) at any node H where `predicate` holds.
struct BoundRule {
  std::string name;
  std::function<bool(const SubgroupSet&)> predicate;
  std::uint64_t bound = 1;
};

/// Nonabelian dihedral: a cyclic subgroup <c> of index 2 and an involution
/// t outside it with t c t = c^-1.
inline bool is_dihedral(const SubgroupSet& h) {
  const Group& g = h.ambient();
  if (h.order() < 6 || h.order() % 2 != 0) return false;
  const auto gens = h.gens();
  bool abelian = true;
  for (auto a : gens) {
    for (auto b : gens) abelian = abelian && g.mul(a, b) == g.mul(b, a);
  }
  if (abelian) return false;

  const std::uint64_t m = h.order() / 2;
  const auto elems = h.elements();
  for (auto c : elems) {
    if (g.element_order(c) != m) continue;
    const SubgroupSet rotations = span({c}, g);
    for (auto t : elems) {
      if (g.element_order(t) != 2 || rotations.contains(t)) continue;
      if (g.mul(g.mul(t, c), t) == g.inv(c)) return true;
    }
    // in a dihedral group of order 2m, m >= 3, every element of order m
    // generates the rotation subgroup, so one c suffices
    return false;
  }
  return false;
}

inline std::vector<BoundRule> default_rules() { return {BoundRule{"dihedral", is_dihedral, 2}}; }

struct RStep {
  SubgroupSet normal;      // N_i, nilpotent and normal in G_{i-1}
  SubgroupSet complement;  // G_i, proper in G_{i-1} with N_i G_i = G_{i-1}
  std::uint64_t exponent;  // e_i = exp(N_i)
};

struct RuleUse {
  std::size_t step;  // the rule replaces r(G_step)
  std::string rule;
  std::uint64_t bound;
};

/// A concrete series certifying an r or r' value.
struct RWitness {
  const Group* ambient = nullptr;
  std::vector<RStep> steps;
  std::vector<RuleUse> rule_uses;
  std::uint64_t value = 1;
};

struct RResult {
  std::uint64_t value;
  RWitness witness;
};

/// Exact r / r' search over the subgroup lattice of one group.
///
/// For a subgroup H the frontier is the set of divisibility-minimal values
/// lcm(e_1, ..., e_s) over admissible series starting at H:
///
///   F(1) = {1}
///   F(H) = min| { lcm(exp N, f) : N nilpotent normal in H, N != 1,
///                 U < H with N U = H, f in F(U) }  (plus rule bounds)
///
/// Memoized by lattice index. Pruning never discards a minimal value:
///  - N is skipped when some f already in F(H) divides exp N;
///  - for nilpotent U every series value of U is a multiple of ge(U), so
///    (N, U) is skipped when some f in F(H) divides lcm(exp N, ge U);
///  - for nilpotent H every value is a multiple of ge(H), so reaching ge(H)
///    ends the search at H.
/// The ge-based cuts rely on each value L leaving H generated by elements of
/// order dividing L. Rules are checked for that up front; the cuts are
/// disabled if any rule violates it.
///
/// Not thread-safe; use one RSearch per thread.
class RSearch {
 public:
  explicit RSearch(const Group& g, std::vector<BoundRule> rules = {}, std::size_t cap = kDefaultCap)
      : group_(&g), rules_(std::move(rules)), cap_(cap) {}

  const Lattice& lattice() {
    if (!lattice_) init_lattice();
    return *lattice_;
  }

  /// Frontier of lattice subgroup h, ascending.
  std::vector<std::uint64_t> frontier(std::size_t h) {
    lattice();
    solve(h);
    std::vector<std::uint64_t> out;
    for (const auto& e : memo_[h]) out.push_back(e.value);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::uint64_t> frontier(const SubgroupSet& h) { return frontier(lattice().index_of(h)); }

  /// Minimum over the frontier of subgroup h, with a witness series.
  RResult value(std::size_t h) {
    lattice();
    solve(h);
    const auto& entries = memo_[h];
    const auto best = std::min_element(entries.begin(), entries.end(),
                                       [](const Entry& a, const Entry& b) { return a.value < b.value; });
    RResult result{best->value, RWitness{}};
    result.witness.ambient = group_;
    result.witness.value = best->value;
    std::size_t node = h;
    std::uint64_t want = best->value;
    while (node != 0) {
      const Entry& e = find_entry(node, want);
      if (e.rule) {
        result.witness.rule_uses.push_back(RuleUse{result.witness.steps.size(), rules_[*e.rule].name, e.value});
        break;
      }
      result.witness.steps.push_back(RStep{(*lattice_)[e.normal], (*lattice_)[e.complement], exponent_of(e.normal)});
      node = e.complement;
      want = e.sub_value;
    }
    return result;
  }

  RResult value() {
    if (auto quick = root_shortcut()) return *std::move(quick);
    return value(lattice().whole());
  }

 private:
  struct Entry {
    std::uint64_t value;
    std::size_t normal = 0;
    std::size_t complement = 0;
    std::uint64_t sub_value = 1;
    std::optional<std::size_t> rule = std::nullopt;
  };

  static bool dominated(const std::vector<Entry>& frontier, std::uint64_t v) {
    return std::any_of(frontier.begin(), frontier.end(), [&](const Entry& e) { return v % e.value == 0; });
  }

  static void offer(std::vector<Entry>& frontier, Entry e) {
    if (dominated(frontier, e.value)) return;
    std::erase_if(frontier, [&](const Entry& f) { return f.value % e.value == 0; });
    frontier.push_back(e);
  }

  void init_lattice() {
    lattice_ = std::make_unique<Lattice>(*group_, cap_);
    const std::size_t n = lattice_->size();
    memo_.assign(n, {});
    solved_.assign(n, false);
    nilpotent_.assign(n, -1);
    exponent_.assign(n, 0);
    ge_.assign(n, 0);
    normal_.assign(n, {});
    normal_ready_.assign(n, false);
    prune_ = true;
    for (const auto& rule : rules_) {
      for (std::size_t i = 0; i < n && prune_; ++i) {
        const auto& h = (*lattice_)[i];
        if (rule.predicate(h) && !generated_by_divisors(h, rule.bound)) prune_ = false;
      }
    }
  }

  /// True iff H = <x in H : ord x | bound>.
  bool generated_by_divisors(const SubgroupSet& h, std::uint64_t bound) const {
    Closure c(*group_);
    h.members().for_each([&](std::size_t x) {
      if (bound % group_->element_order(static_cast<ElementId>(x)) == 0) c.add(static_cast<ElementId>(x));
    });
    return c.size() == h.order();
  }

  /// Nilpotent group with exp = ge and no rules: the single step (G, 1)
  /// attains the lower bound ge, no lattice needed.
  std::optional<RResult> root_shortcut() {
    if (!rules_.empty() || lattice_) return std::nullopt;
    const SubgroupSet whole = whole_group(*group_);
    if (!is_nilpotent(whole)) return std::nullopt;
    const auto e = exponent(whole);
    if (generator_exponent(whole) != e) return std::nullopt;
    RResult r{e, RWitness{}};
    r.witness.ambient = group_;
    r.witness.value = e;
    if (!whole.is_trivial()) r.witness.steps.push_back(RStep{whole, trivial_subgroup(*group_), e});
    return r;
  }

  bool nilpotent_of(std::size_t i) {
    if (nilpotent_[i] < 0) nilpotent_[i] = is_nilpotent((*lattice_)[i]) ? 1 : 0;
    return nilpotent_[i] == 1;
  }

  std::uint64_t exponent_of(std::size_t i) {
    if (exponent_[i] == 0) exponent_[i] = exponent((*lattice_)[i]);
    return exponent_[i];
  }

  std::uint64_t ge_of(std::size_t i) {
    if (ge_[i] == 0) ge_[i] = generator_exponent((*lattice_)[i]);
    return ge_[i];
  }

  const std::vector<std::size_t>& normal_of(std::size_t i) {
    if (!normal_ready_[i]) {
      normal_[i] = lattice_->normal_in(i);
      std::reverse(normal_[i].begin(), normal_[i].end());
      normal_ready_[i] = true;
    }
    return normal_[i];
  }

  const Entry& find_entry(std::size_t node, std::uint64_t value) const {
    for (const auto& e : memo_[node]) {
      if (e.value == value) return e;
    }
    throw std::logic_error("frontier value missing from memo");
  }

  void solve(std::size_t h) {
    if (solved_[h]) return;
    std::vector<Entry> frontier;
    if (h == 0) {
      frontier.push_back(Entry{1});
    } else {
      search(h, frontier);
      if (frontier.empty()) {
        throw NoSeries("no nilpotent normal subgroup with a partial complement below a subgroup of order " +
                       std::to_string((*lattice_)[h].order()));
      }
    }
    memo_[h] = std::move(frontier);
    solved_[h] = true;
  }

  void search(std::size_t h, std::vector<Entry>& frontier) {
    const bool stop_at_ge = prune_ && nilpotent_of(h);
    const std::uint64_t floor = stop_at_ge ? ge_of(h) : 0;
    auto reached_floor = [&] {
      return stop_at_ge &&
             std::any_of(frontier.begin(), frontier.end(), [&](const Entry& e) { return e.value == floor; });
    };

    // normal_of lists largest first, so N = H comes before smaller N
    for (auto n : normal_of(h)) {
      if (n == 0 || !nilpotent_of(n)) continue;
      const std::uint64_t e = exponent_of(n);
      if (dominated(frontier, e)) continue;
      for (auto u : lattice_->partial_complements(h, n)) {
        if (prune_ && nilpotent_of(u) && dominated(frontier, std::lcm(e, ge_of(u)))) continue;
        solve(u);
        for (const auto& sub : memo_[u]) offer(frontier, Entry{std::lcm(e, sub.value), n, u, sub.value, std::nullopt});
        if (reached_floor()) return;
      }
    }
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      if (rules_[r].predicate((*lattice_)[h])) offer(frontier, Entry{rules_[r].bound, 0, 0, 1, r});
    }
  }

  const Group* group_;
  std::vector<BoundRule> rules_;
  std::size_t cap_;
  std::unique_ptr<Lattice> lattice_;
  std::vector<std::vector<Entry>> memo_;
  std::vector<bool> solved_;
  std::vector<int> nilpotent_;
  std::vector<std::uint64_t> exponent_;
  std::vector<std::uint64_t> ge_;
  std::vector<std::vector<std::size_t>> normal_;
  std::vector<bool> normal_ready_;
  bool prune_ = true;
};

/// r(G): least lcm of exponents over all admissible series.
inline RResult r_value(const Group& g, std::size_t cap = kDefaultCap) {
  if (!is_solvable(g)) throw NoSeries("r is defined for solvable groups only");
  return RSearch(g, {}, cap).value();
}

/// r'(G): r with rule bounds substituted at any node of the series.
inline RResult r_prime(const Group& g, std::vector<BoundRule> rules = default_rules(), std::size_t cap = kDefaultCap) {
  if (!is_solvable(g)) throw NoSeries("r' is defined for solvable groups only");
  return RSearch(g, std::move(rules), cap).value();
}

/// Divisibility-minimal series values for the whole group.
inline std::vector<std::uint64_t> lcm_frontier(const Group& g, std::size_t cap = kDefaultCap) {
  RSearch search(g, {}, cap);
  return search.frontier(search.lattice().whole());
}

enum class WitnessFault {
  kNone,
  kNoAmbient,
  kNotSubgroup,
  kNotContained,
  kTrivialNormal,
  kNotNormal,
  kNotNilpotent,
  kNotProper,
  kNotCovering,
  kExponentMismatch,
  kIncomplete,
  kUnknownRule,
  kRuleNotApplicable,
  kValueMismatch,
};

inline const char* to_string(WitnessFault f) {
  switch (f) {
    case WitnessFault::kNone: return "ok";
    case WitnessFault::kNoAmbient: return "no ambient group";
    case WitnessFault::kNotSubgroup: return "not a subgroup";
    case WitnessFault::kNotContained: return "not contained in previous term";
    case WitnessFault::kTrivialNormal: return "trivial normal subgroup";
    case WitnessFault::kNotNormal: return "not normal";
    case WitnessFault::kNotNilpotent: return "not nilpotent";
    case WitnessFault::kNotProper: return "complement not proper";
    case WitnessFault::kNotCovering: return "product does not cover";
    case WitnessFault::kExponentMismatch: return "exponent mismatch";
    case WitnessFault::kIncomplete: return "series does not reach the trivial group";
    case WitnessFault::kUnknownRule: return "unknown rule";
    case WitnessFault::kRuleNotApplicable: return "rule not applicable";
    case WitnessFault::kValueMismatch: return "value mismatch";
  }
  return "unknown";
}

struct WitnessCheck {
  WitnessFault fault = WitnessFault::kNone;
  std::size_t step = 0;
  explicit operator bool() const noexcept { return fault == WitnessFault::kNone; }
};

namespace detail {

/// Member set closed under products (finite, so also under inverses).
inline bool closed_under_products(const Group& g, const Bitset& members) {
  if (!members.test(kIdentity)) return false;
  const auto elems = members.to_vector();
  for (auto a : elems) {
    for (auto b : elems) {
      if (!members.test(g.mul(a, b))) return false;
    }
  }
  return true;
}

inline bool normal_by_elements(const Bitset& n, const Bitset& parent, const Group& g) {
  const auto ns = n.to_vector();
  bool ok = true;
  parent.for_each([&](std::size_t x) {
    for (auto k : ns) {
      if (!n.test(g.conjugate(k, static_cast<ElementId>(x)))) ok = false;
    }
  });
  return ok;
}

inline std::size_t product_set_size(const Bitset& n, const Bitset& u, const Group& g) {
  Bitset prod(g.order());
  const auto us = u.to_vector();
  n.for_each([&](std::size_t a) {
    for (auto b : us) prod.set(g.mul(static_cast<ElementId>(a), b));
  });
  return prod.count();
}

}  // namespace detail

/// Re-verifies every side condition of a witness from scratch: subgroup
/// closure, containment, normality (by all elements), nilpotency (lower
/// central series), properness, N U = G by explicit product sets, exponents,
/// rule predicates and the final lcm.
inline WitnessCheck check_witness(const RWitness& w, const std::vector<BoundRule>& rules = default_rules()) {
  if (w.ambient == nullptr) return {WitnessFault::kNoAmbient, 0};
  const Group& g = *w.ambient;
  SubgroupSet current = whole_group(g);
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& s = w.steps[i];
    if (&s.normal.ambient() != &g || &s.complement.ambient() != &g) return {WitnessFault::kNotSubgroup, i};
    if (!detail::closed_under_products(g, s.normal.members()) ||
        !detail::closed_under_products(g, s.complement.members())) {
      return {WitnessFault::kNotSubgroup, i};
    }
    if (!s.normal.is_subgroup_of(current) || !s.complement.is_subgroup_of(current)) {
      return {WitnessFault::kNotContained, i};
    }
    if (s.normal.is_trivial()) return {WitnessFault::kTrivialNormal, i};
    if (!detail::normal_by_elements(s.normal.members(), current.members(), g)) return {WitnessFault::kNotNormal, i};
    if (!lower_central_series(s.normal).back().is_trivial()) return {WitnessFault::kNotNilpotent, i};
    if (s.complement.order() == current.order()) return {WitnessFault::kNotProper, i};
    if (detail::product_set_size(s.normal.members(), s.complement.members(), g) != current.order()) {
      return {WitnessFault::kNotCovering, i};
    }
    std::uint64_t e = 1;
    s.normal.members().for_each([&](std::size_t x) { e = std::lcm(e, g.element(static_cast<ElementId>(x)).order()); });
    if (e != s.exponent) return {WitnessFault::kExponentMismatch, i};
    value = std::lcm(value, e);
    current = s.complement;
  }
  if (w.rule_uses.empty()) {
    if (!current.is_trivial()) return {WitnessFault::kIncomplete, w.steps.size()};
  } else {
    if (w.rule_uses.size() != 1 || w.rule_uses.front().step != w.steps.size()) {
      return {WitnessFault::kIncomplete, w.steps.size()};
    }
    const auto& use = w.rule_uses.front();
    const auto it = std::find_if(rules.begin(), rules.end(), [&](const BoundRule& r) { return r.name == use.rule; });
    if (it == rules.end() || it->bound != use.bound) return {WitnessFault::kUnknownRule, use.step};
    if (!it->predicate(current)) return {WitnessFault::kRuleNotApplicable, use.step};
    value = std::lcm(value, use.bound);
  }
  if (value != w.value) return {WitnessFault::kValueMismatch, w.steps.size()};
  return {};
}

}  // namespace grpbounds
