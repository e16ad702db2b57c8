#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "grpbounds/catalog.hpp"
#include "grpbounds/invariants.hpp"
#include "grpbounds/rsearch.hpp"

namespace grpbounds {

/// Runs fn(i) for i in [0, n) on up to `jobs` threads; results keep input order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, std::size_t jobs, Fn fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

inline std::size_t default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Per-group numbers shown by `scan`. r and r' are unset for non-solvable groups.
struct ScanRow {
  std::string id;
  std::uint64_t order = 0;
  std::optional<int> nilpotency_class;
  std::uint64_t exponent = 0;
  std::uint64_t generator_exponent = 0;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> rprime;

  bool nilpotent() const { return nilpotency_class.has_value(); }
  bool r_gt_ge() const { return r && *r > generator_exponent; }
  bool rprime_gt_ge() const { return rprime && *rprime > generator_exponent; }
};

struct ScanOptions {
  bool with_r = true;
  bool with_rprime = true;
  std::vector<BoundRule> rules = default_rules();
  std::size_t cap = kDefaultCap;
};

inline ScanRow scan_row(const CatalogRecord& rec, const ScanOptions& opts = {}) {
  const Group g = to_group(rec, opts.cap);
  const SubgroupSet whole = whole_group(g);
  ScanRow row;
  row.id = rec.id;
  row.order = g.order();
  row.nilpotency_class = nilpotency_class(whole);
  row.exponent = exponent(whole);
  row.generator_exponent = generator_exponent(whole);
  if (is_solvable(whole)) {
    if (opts.with_r) row.r = RSearch(g, {}, opts.cap).value().value;
    if (opts.with_rprime) row.rprime = RSearch(g, opts.rules, opts.cap).value().value;
  }
  return row;
}

inline constexpr const char* kScanCsvHeader = "id,order,class,nilpotent,exp,ge,r,rprime,r_gt_ge,rprime_gt_ge";

inline std::string to_csv_line(const ScanRow& row) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("NA"); };
  std::ostringstream out;
  out << row.id << ',' << row.order << ',' << opt(row.nilpotency_class) << ',' << (row.nilpotent() ? "true" : "false")
      << ',' << row.exponent << ',' << row.generator_exponent << ',' << opt(row.r) << ',' << opt(row.rprime) << ','
      << (row.r_gt_ge() ? "true" : "false") << ',' << (row.rprime_gt_ge() ? "true" : "false");
  return out.str();
}

inline nlohmann::json to_json(const ScanRow& row) {
  auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return nlohmann::json{{"id", row.id},
                        {"order", row.order},
                        {"class", opt(row.nilpotency_class)},
                        {"nilpotent", row.nilpotent()},
                        {"exp", row.exponent},
                        {"ge", row.generator_exponent},
                        {"r", opt(row.r)},
                        {"rprime", opt(row.rprime)},
                        {"r_gt_ge", row.r_gt_ge()},
                        {"rprime_gt_ge", row.rprime_gt_ge()}};
}

/// Subgroup as {order, gens} with 1-based generator images.
inline nlohmann::json to_json(const SubgroupSet& h) {
  nlohmann::json gens = nlohmann::json::array();
  for (auto x : h.gens()) {
    std::vector<std::uint32_t> images;
    for (auto p : h.ambient().element(x).images()) images.push_back(p + 1);
    gens.push_back(images);
  }
  return nlohmann::json{{"order", h.order()}, {"gens", gens}};
}

inline nlohmann::json to_json(const RWitness& w) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : w.steps) {
    steps.push_back({{"normal", to_json(s.normal)}, {"complement", to_json(s.complement)}, {"exponent", s.exponent}});
  }
  nlohmann::json uses = nlohmann::json::array();
  for (const auto& u : w.rule_uses) uses.push_back({{"step", u.step}, {"rule", u.rule}, {"bound", u.bound}});
  return nlohmann::json{{"value", w.value}, {"steps", steps}, {"rule_uses", uses}};
}

struct InfoOptions {
  std::vector<BoundRule> rules = default_rules();
  bool witnesses = true;
  std::size_t cap = kDefaultCap;
};

/// Full report for one record: invariants, r and r' with witnesses.
inline nlohmann::json info_json(const CatalogRecord& rec, const InfoOptions& opts = {}) {
  const Group g = to_group(rec, opts.cap);
  const InvariantReport rep = invariant_report(g);
  nlohmann::json j;
  j["id"] = rec.id;
  j["order"] = rep.order;
  j["exponent"] = rep.exponent;
  j["generator_exponent"] = rep.generator_exponent;
  j["nilpotency_class"] = rep.nilpotency_class ? nlohmann::json(*rep.nilpotency_class) : nlohmann::json("not nilpotent");
  j["is_nilpotent"] = rep.is_nilpotent;
  j["is_solvable"] = rep.is_solvable;
  j["prime"] = rep.prime ? nlohmann::json(*rep.prime) : nlohmann::json(nullptr);
  j["is_regular"] = rep.is_regular ? nlohmann::json(*rep.is_regular) : nlohmann::json(nullptr);
  j["exp_derived"] = rep.exp_derived;
  if (rep.is_solvable) {
    const RResult r = RSearch(g, {}, opts.cap).value();
    const RResult rp = RSearch(g, opts.rules, opts.cap).value();
    j["r"] = r.value;
    j["rprime"] = rp.value;
    if (opts.witnesses) {
      j["r_witness"] = to_json(r.witness);
      j["rprime_witness"] = to_json(rp.witness);
    }
  } else {
    j["r"] = nullptr;
    j["rprime"] = nullptr;
  }
  return j;
}

}  // namespace grpbounds
