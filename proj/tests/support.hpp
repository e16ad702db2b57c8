#pragma once

#include <string>
#include <vector>

#include "grpbounds/catalog.hpp"

namespace testing_support {

inline std::string fixture_path(const std::string& name) { return std::string(GRPBOUNDS_FIXTURES_DIR) + "/" + name; }

/// Parsed once per process.
inline const std::vector<grpbounds::CatalogRecord>& small_catalog() {
  static const auto records = grpbounds::parse_catalog(fixture_path("orders-1-63.jsonl"));
  return records;
}

inline const std::vector<grpbounds::CatalogRecord>& order243_catalog() {
  static const auto records = grpbounds::parse_catalog(fixture_path("order-243.jsonl"));
  return records;
}

inline const std::vector<grpbounds::CatalogRecord>& extras_catalog() {
  static const auto records = grpbounds::parse_catalog(fixture_path("extras.jsonl"));
  return records;
}

inline const grpbounds::CatalogRecord& record(const std::string& id) {
  for (const auto* list : {&small_catalog(), &order243_catalog(), &extras_catalog()}) {
    for (const auto& rec : *list) {
      if (rec.id == id) return rec;
    }
  }
  throw grpbounds::InvalidArgument("no fixture record " + id);
}

/// Records of small_catalog() with order in [lo, hi].
inline std::vector<grpbounds::CatalogRecord> small_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<grpbounds::CatalogRecord> out;
  for (const auto& rec : small_catalog()) {
    if (rec.order >= lo && rec.order <= hi) out.push_back(rec);
  }
  return out;
}

}  // namespace testing_support
