#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "grpbounds/build.hpp"
#include "grpbounds/catalog.hpp"
#include "grpbounds/iso.hpp"
#include "grpbounds/report.hpp"

namespace grpbounds {

class MissingFixture : public Error {
 public:
  using Error::Error;
};

inline constexpr const char* kSmallOrdersFixture = "orders-1-63.jsonl";
inline constexpr const char* kOrder243Fixture = "order-243.jsonl";
inline constexpr const char* kExtrasFixture = "extras.jsonl";

struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string provenance;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
};

/// The three committed catalogs with precomputed scan rows.
struct ClaimData {
  std::vector<CatalogRecord> small;  // orders 1..63
  std::vector<CatalogRecord> order243;
  std::vector<CatalogRecord> extras;  // 64.189
  std::vector<ScanRow> small_rows;
  std::vector<ScanRow> order243_rows;  // r only
  std::vector<ScanRow> extras_rows;

  static ClaimData load(const std::filesystem::path& dir, std::size_t jobs) {
    auto read = [&](const char* name) {
      const auto path = dir / name;
      if (!std::filesystem::exists(path)) throw MissingFixture("missing fixture " + path.string());
      return parse_catalog(path.string());
    };
    ClaimData d;
    d.small = read(kSmallOrdersFixture);
    d.order243 = read(kOrder243Fixture);
    d.extras = read(kExtrasFixture);
    const ScanOptions full;
    ScanOptions r_only;
    r_only.with_rprime = false;
    d.small_rows = parallel_map<ScanRow>(d.small.size(), jobs, [&](std::size_t i) { return scan_row(d.small[i], full); });
    d.order243_rows =
        parallel_map<ScanRow>(d.order243.size(), jobs, [&](std::size_t i) { return scan_row(d.order243[i], r_only); });
    d.extras_rows =
        parallel_map<ScanRow>(d.extras.size(), jobs, [&](std::size_t i) { return scan_row(d.extras[i], full); });
    return d;
  }

  const CatalogRecord& record(const std::string& id) const {
    for (const auto* list : {&small, &order243, &extras}) {
      for (const auto& rec : *list) {
        if (rec.id == id) return rec;
      }
    }
    throw MissingFixture("fixture record " + id + " not found");
  }
};

namespace detail {

inline std::string join_ids(const std::vector<const ScanRow*>& rows) {
  std::string s;
  for (const auto* r : rows) s += (s.empty() ? "" : " ") + r->id;
  return s;
}

inline std::vector<const ScanRow*> flagged_nilpotent_below_64(const ClaimData& d) {
  std::vector<const ScanRow*> out;
  for (const auto& row : d.small_rows) {
    if (row.order < 64 && row.nilpotent() && row.r_gt_ge()) out.push_back(&row);
  }
  return out;
}

inline bool p_group_of_class_at_most(const ScanRow& row, std::uint64_t p, int max_class) {
  return row.order > 1 && prime_power_base(row.order) == p && row.nilpotency_class &&
         *row.nilpotency_class <= max_class;
}

}  // namespace detail

struct Claim {
  std::string id;
  std::string description;
  std::string expected;
  std::string provenance;
  std::function<bool(const ClaimData&, std::string&)> evaluate;
};

/// The fixed list of checked computational statements. Expected values are
/// data so they can be audited without reading the evaluation code.
inline std::vector<Claim> paper_claims() {
  std::vector<Claim> claims;

  claims.push_back({"C1", "the dihedral group of order 16 has r > ge", "r > ge (ge = 2)", "published",
                    [](const ClaimData& d, std::string& out) {
                      for (std::size_t i = 0; i < d.small.size(); ++i) {
                        if (d.small[i].order != 16) continue;
                        const Group g = to_group(d.small[i]);
                        if (!is_dihedral(whole_group(g))) continue;
                        const auto& row = d.small_rows[i];
                        out = row.id + ": ge=" + std::to_string(row.generator_exponent) + " r=" + std::to_string(*row.r);
                        return row.generator_exponent == 2 && row.r_gt_ge();
                      }
                      out = "no dihedral group of order 16 in catalog";
                      return false;
                    }});

  claims.push_back({"C2", "nilpotent groups of order < 64 with r > ge", "8", "published",
                    [](const ClaimData& d, std::string& out) {
                      const auto rows = detail::flagged_nilpotent_below_64(d);
                      out = std::to_string(rows.size()) + " (" + detail::join_ids(rows) + ")";
                      return rows.size() == 8;
                    }});

  claims.push_back({"C3", "of those, groups reaching r' = ge under the dihedral rule", "6", "published",
                    [](const ClaimData& d, std::string& out) {
                      std::vector<const ScanRow*> fixed;
                      for (const auto* row : detail::flagged_nilpotent_below_64(d)) {
                        if (row->rprime && *row->rprime == row->generator_exponent) fixed.push_back(row);
                      }
                      out = std::to_string(fixed.size()) + " (" + detail::join_ids(fixed) + ")";
                      return fixed.size() == 6;
                    }});

  claims.push_back(
      {"C4", "the two exceptions are SmallGroup(32,19) and SmallGroup(32,20) up to isomorphism, ge = 4, r' = 8",
       "32.19 and 32.20 with ge=4 r'=8", "published", [](const ClaimData& d, std::string& out) {
         std::vector<const ScanRow*> rest;
         for (const auto* row : detail::flagged_nilpotent_below_64(d)) {
           if (row->rprime_gt_ge()) rest.push_back(row);
         }
         out = std::to_string(rest.size()) + " exceptions:";
         if (rest.size() != 2) return false;
         bool ok = true;
         std::vector<bool> matched(2, false);
         const Group targets[] = {to_group(d.record("32.19")), to_group(d.record("32.20"))};
         for (const auto* row : rest) {
           const Group g = to_group(d.record(row->id));
           std::string iso = "none";
           for (int t = 0; t < 2; ++t) {
             if (!matched[t] && is_isomorphic(g, targets[t])) {
               matched[t] = true;
               iso = t == 0 ? "32.19" : "32.20";
               break;
             }
           }
           out += " " + row->id + "~" + iso + " ge=" + std::to_string(row->generator_exponent) +
                  " r'=" + std::to_string(*row->rprime);
           ok = ok && iso != "none" && row->generator_exponent == 4 && *row->rprime == 8;
         }
         return ok && matched[0] && matched[1];
       }});

  claims.push_back({"C5", "r'(SmallGroup(64,189)) = 2 and it has index-2 normal subgroups isomorphic to 32.19 and 32.20",
                    "r'=2, both embeddings", "published", [](const ClaimData& d, std::string& out) {
                      const CatalogRecord& rec = d.record("64.189");
                      const Group g = to_group(rec);
                      const std::uint64_t rp = RSearch(g, default_rules()).value().value;
                      const Group u1 = to_group(d.record("32.19"));
                      const Group u2 = to_group(d.record("32.20"));
                      bool has_u1 = false, has_u2 = false;
                      for (const auto& n : normal_subgroups(g)) {
                        if (n.order() * 2 != g.order()) continue;
                        const Group h = subgroup_as_group(n);
                        has_u1 = has_u1 || is_isomorphic(h, u1);
                        has_u2 = has_u2 || is_isomorphic(h, u2);
                      }
                      out = "r'=" + std::to_string(rp) + " contains 32.19: " + (has_u1 ? "yes" : "no") +
                            ", contains 32.20: " + (has_u2 ? "yes" : "no");
                      return rp == 2 && has_u1 && has_u2;
                    }});

  claims.push_back({"C6", "order 243: groups of class 4, and how many of them fail r = ge", "67 groups, 6 of class 4, 2 fail",
                    "published", [](const ClaimData& d, std::string& out) {
                      std::size_t class4 = 0, fail = 0;
                      std::string failing;
                      for (const auto& row : d.order243_rows) {
                        if (row.nilpotency_class != 4) continue;
                        ++class4;
                        if (row.r != row.generator_exponent) {
                          ++fail;
                          failing += " " + row.id;
                        }
                      }
                      out = std::to_string(d.order243_rows.size()) + " groups, " + std::to_string(class4) +
                            " of class 4, " + std::to_string(fail) + " fail (" + failing.substr(failing.empty() ? 0 : 1) + ")";
                      return d.order243_rows.size() == 67 && class4 == 6 && fail == 2;
                    }});

  claims.push_back({"C7", "r = ge for 2-groups of class <= 2 (order <= 64) and 3-groups of class <= 3 (order <= 243)",
                    "0 violations", "published", [](const ClaimData& d, std::string& out) {
                      std::size_t checked = 0, violations = 0;
                      std::string bad;
                      auto check = [&](const ScanRow& row) {
                        const bool two = detail::p_group_of_class_at_most(row, 2, 2) && row.order <= 64;
                        const bool three = detail::p_group_of_class_at_most(row, 3, 3) && row.order <= 243;
                        if (!two && !three) return;
                        ++checked;
                        if (row.r != row.generator_exponent) {
                          ++violations;
                          bad += " " + row.id;
                        }
                      };
                      for (const auto* rows : {&d.small_rows, &d.order243_rows, &d.extras_rows}) {
                        for (const auto& row : *rows) check(row);
                      }
                      out = std::to_string(violations) + " violations over " + std::to_string(checked) + " groups" + bad;
                      return checked > 0 && violations == 0;
                    }});

  claims.push_back({"C8", "C3 wr C3: class 3, ge 3, exp 9, r 3", "class=3 ge=3 exp=9 r=3", "published",
                    [](const ClaimData&, std::string& out) {
                      const Group c3 = cyclic(3);
                      const Group w = wreath(c3, c3);
                      const auto cls = nilpotency_class(w);
                      const auto ge = generator_exponent(w);
                      const auto exp = exponent(w);
                      const auto r = r_value(w).value;
                      out = "order=" + std::to_string(w.order()) + " class=" + (cls ? std::to_string(*cls) : "NA") +
                            " ge=" + std::to_string(ge) + " exp=" + std::to_string(exp) + " r=" + std::to_string(r);
                      return cls == 3 && ge == 3 && exp == 9 && r == 3;
                    }});

  return claims;
}

/// Loads the fixtures from `dir` and evaluates every claim.
/// Throws MissingFixture / CatalogError on unusable input.
inline std::vector<ClaimResult> verify_claims(const std::filesystem::path& dir, std::size_t jobs = default_jobs()) {
  const auto load_start = std::chrono::steady_clock::now();
  const ClaimData data = ClaimData::load(dir, jobs);
  const double load_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - load_start).count();

  std::vector<ClaimResult> results;
  for (const auto& claim : paper_claims()) {
    ClaimResult res{claim.id, claim.description, claim.expected, claim.provenance, "", false, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      res.pass = claim.evaluate(data, res.computed);
    } catch (const MissingFixture&) {
      throw;
    } catch (const std::exception& e) {
      res.computed = std::string("error: ") + e.what();
      res.pass = false;
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(res));
  }
  if (!results.empty()) results.front().seconds += load_seconds;
  return results;
}

}  // namespace grpbounds
