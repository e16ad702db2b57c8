#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "grpbounds/group.hpp"

namespace grpbounds {

/// Malformed or inconsistent catalog input; `line` is 1-based, 0 if unknown.
class CatalogError : public Error {
 public:
  CatalogError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One group definition. Generator images are 1-based on the wire.
struct CatalogRecord {
  std::string id;  // "order.index" in the small-groups numbering
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> gens;
  std::optional<std::vector<std::string>> tags;
  std::string source;

  bool operator==(const CatalogRecord&) const = default;
};

/// Converts 1-based images to internal 0-based permutations and enumerates.
inline Group to_group(const CatalogRecord& rec, std::size_t cap = kDefaultCap) {
  std::vector<Perm> perms;
  perms.reserve(rec.gens.size());
  for (const auto& images : rec.gens) {
    std::vector<Point> zero_based;
    zero_based.reserve(images.size());
    for (auto x : images) {
      if (x == 0) throw InvalidArgument("catalog images are 1-based");
      zero_based.push_back(x - 1);
    }
    perms.emplace_back(std::move(zero_based));
  }
  return Group::enumerate(perms, cap);
}

/// Builds a record from a group; images are converted to 1-based.
inline CatalogRecord to_record(const Group& g, std::string id, std::optional<std::vector<std::string>> tags,
                               std::string source) {
  CatalogRecord rec;
  rec.id = std::move(id);
  rec.order = g.order();
  rec.degree = g.degree();
  for (const auto& p : g.generators()) {
    std::vector<std::uint32_t> images;
    for (auto x : p.images()) images.push_back(x + 1);
    rec.gens.push_back(std::move(images));
  }
  rec.tags = std::move(tags);
  rec.source = std::move(source);
  return rec;
}

/// Checks bijectivity of every generator and that the closure has exactly
/// `order` elements.
inline void validate(const CatalogRecord& rec, std::size_t line = 0, std::size_t cap = kDefaultCap) {
  if (rec.degree < 1) throw CatalogError(line, rec.id + ": degree must be at least 1");
  if (rec.gens.empty()) throw CatalogError(line, rec.id + ": no generators");
  for (const auto& images : rec.gens) {
    if (images.size() != rec.degree) throw CatalogError(line, rec.id + ": generator length differs from degree");
    std::vector<bool> seen(rec.degree + 1, false);
    for (auto x : images) {
      if (x < 1 || x > rec.degree || seen[x]) throw CatalogError(line, rec.id + ": generator is not a bijection");
      seen[x] = true;
    }
  }
  std::size_t actual = 0;
  try {
    actual = to_group(rec, cap).order();
  } catch (const CapExceeded& e) {
    throw CatalogError(line, rec.id + ": " + e.what());
  }
  if (actual != rec.order) {
    throw CatalogError(line, rec.id + ": order mismatch, declared " + std::to_string(rec.order) + " but generators give " +
                                 std::to_string(actual));
  }
}

/// Canonical single-line JSON: keys id, order, degree, gens, tags (if set), source.
inline std::string to_jsonl(const CatalogRecord& rec) {
  nlohmann::ordered_json j;
  j["id"] = rec.id;
  j["order"] = rec.order;
  j["degree"] = rec.degree;
  j["gens"] = rec.gens;
  if (rec.tags) j["tags"] = *rec.tags;
  j["source"] = rec.source;
  return j.dump();
}

inline CatalogRecord parse_record(const std::string& text, std::size_t line = 0) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError(line, std::string("malformed JSON: ") + e.what());
  }
  try {
    CatalogRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.order = j.at("order").get<std::uint64_t>();
    rec.degree = j.at("degree").get<std::size_t>();
    rec.gens = j.at("gens").get<std::vector<std::vector<std::uint32_t>>>();
    if (j.contains("tags")) rec.tags = j.at("tags").get<std::vector<std::string>>();
    rec.source = j.value("source", std::string{});
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(line, std::string("bad record: ") + e.what());
  }
}

/// Parses JSON Lines; blank lines are skipped. Every record is validated and
/// duplicate ids are rejected.
inline std::vector<CatalogRecord> parse_catalog(std::istream& in, std::size_t cap = kDefaultCap) {
  std::vector<CatalogRecord> records;
  std::unordered_set<std::string> ids;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    CatalogRecord rec = parse_record(text, line);
    if (!ids.insert(rec.id).second) throw CatalogError(line, "duplicate id " + rec.id);
    validate(rec, line, cap);
    records.push_back(std::move(rec));
  }
  return records;
}

inline std::vector<CatalogRecord> parse_catalog(const std::string& path, std::size_t cap = kDefaultCap) {
  std::ifstream in(path);
  if (!in) throw CatalogError(0, "cannot open catalog " + path);
  return parse_catalog(in, cap);
}

inline void write_catalog(const std::vector<CatalogRecord>& records, std::ostream& out) {
  for (const auto& rec : records) out << to_jsonl(rec) << '\n';
}

inline void write_catalog(const std::vector<CatalogRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CatalogError(0, "cannot write catalog " + path);
  write_catalog(records, out);
  if (!out) throw CatalogError(0, "write failed for " + path);
}

}  // namespace grpbounds
