// grpbounds command-line front end.
// Exit codes: 0 success, 1 claim failure, 2 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grpbounds/build.hpp"
#include "grpbounds/catalog.hpp"
#include "grpbounds/claims.hpp"
#include "grpbounds/report.hpp"

namespace fs = std::filesystem;
using namespace grpbounds;

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitInputError = 2;

struct InputError : Error {
  using Error::Error;
};

struct Common {
  std::string catalog = "fixtures";
  std::string out;
  std::string format;
  std::string rules = "default";
  std::size_t jobs = default_jobs();
  std::size_t cap = kDefaultCap;
  bool no_witness = false;
};

std::vector<BoundRule> rules_from(const std::string& name) {
  if (name == "default") return default_rules();
  if (name == "none") return {};
  throw InputError("unknown rule set '" + name + "' (expected default or none)");
}

/// A file is read as one catalog; a directory means its standard fixtures.
std::vector<CatalogRecord> load_catalog(const std::string& path, std::size_t cap) {
  if (!fs::is_directory(path)) {
    if (!fs::exists(path)) throw InputError("catalog not found: " + path);
    return parse_catalog(path, cap);
  }
  std::vector<CatalogRecord> all;
  for (const char* name : {kSmallOrdersFixture, kOrder243Fixture, kExtrasFixture}) {
    const fs::path file = fs::path(path) / name;
    if (!fs::exists(file)) continue;
    auto part = parse_catalog(file.string(), cap);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (all.empty()) throw InputError("no catalog files in " + path);
  return all;
}

const CatalogRecord& find_record(const std::vector<CatalogRecord>& records, const std::string& id) {
  for (const auto& rec : records) {
    if (rec.id == id) return rec;
  }
  throw InputError("unknown group id " + id);
}

/// Writes to --out if given, otherwise stdout.
template <typename Fn>
void emit(const std::string& out, bool append, Fn write) {
  if (out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(out, append ? std::ios::app : std::ios::trunc);
  if (!file) throw InputError("cannot open output " + out);
  write(file);
}

int cmd_info(const Common& c, const std::string& id) {
  const auto records = load_catalog(c.catalog, c.cap);
  InfoOptions opts;
  opts.rules = rules_from(c.rules);
  opts.witnesses = !c.no_witness;
  opts.cap = c.cap;
  const auto j = info_json(find_record(records, id), opts);
  emit(c.out, false, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return 0;
}

struct ScanFilters {
  bool nilpotent = false;
  std::optional<std::uint64_t> min_order;
  std::optional<std::uint64_t> max_order;
  std::optional<int> cls;
  bool flagged = false;
};

int cmd_scan(const Common& c, const ScanFilters& f) {
  const auto format = c.format.empty() ? std::string("csv") : c.format;
  if (format != "csv" && format != "json") throw InputError("unknown format " + format);
  auto records = load_catalog(c.catalog, c.cap);
  std::erase_if(records, [&](const CatalogRecord& r) {
    return (f.min_order && r.order < *f.min_order) || (f.max_order && r.order > *f.max_order);
  });
  ScanOptions opts;
  opts.rules = rules_from(c.rules);
  opts.cap = c.cap;
  auto rows = parallel_map<ScanRow>(records.size(), c.jobs, [&](std::size_t i) { return scan_row(records[i], opts); });
  std::erase_if(rows, [&](const ScanRow& row) {
    return (f.nilpotent && !row.nilpotent()) || (f.cls && row.nilpotency_class != f.cls) ||
           (f.flagged && !row.r_gt_ge() && !row.rprime_gt_ge());
  });
  emit(c.out, false, [&](std::ostream& os) {
    if (format == "csv") {
      os << kScanCsvHeader << '\n';
      for (const auto& row : rows) os << to_csv_line(row) << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows) arr.push_back(to_json(row));
      os << arr.dump(2) << '\n';
    }
  });
  return 0;
}

int cmd_verify(const Common& c) {
  const auto results = verify_claims(c.catalog, c.jobs);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  emit(c.out, false, [&](std::ostream& os) {
    if (c.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"description", r.description},
                       {"expected", r.expected},
                       {"provenance", r.provenance},
                       {"computed", r.computed},
                       {"pass", r.pass},
                       {"seconds", r.seconds}});
      }
      os << arr.dump(2) << '\n';
      return;
    }
    for (const auto& r : results) {
      os << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.description << '\n'
         << "       expected [" << r.provenance << "]: " << r.expected << '\n'
         << "       computed: " << r.computed << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    }
    os << (all ? "all claims pass" : "some claims FAILED") << '\n';
  });
  return all ? 0 : kExitClaimFailure;
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw InputError("expected a positive integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

/// Operand syntax: C<n>, D<order>, or a catalog id.
Group operand(const std::string& s, const Common& c, std::optional<std::vector<CatalogRecord>>& records) {
  static const std::regex named(R"(([CD])(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, named)) {
    const std::size_t n = to_size(m[2]);
    return m[1] == "C" ? cyclic(n, c.cap) : dihedral(n, c.cap);
  }
  if (!records) records = load_catalog(c.catalog, c.cap);
  return to_group(find_record(*records, s), c.cap);
}

int cmd_construct(const Common& c, const std::string& kind, const std::vector<std::string>& args,
                  const std::string& id_override) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw InputError(kind + " takes " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()));
    }
  };
  std::optional<std::vector<CatalogRecord>> records;
  std::optional<Group> g;
  if (kind == "cyclic") {
    need(1);
    g = cyclic(to_size(args[0]), c.cap);
  } else if (kind == "dihedral") {
    need(1);
    g = dihedral(to_size(args[0]), c.cap);
  } else if (kind == "elemabelian") {
    need(2);
    g = elementary_abelian(to_size(args[0]), to_size(args[1]), c.cap);
  } else if (kind == "direct") {
    need(2);
    g = direct_product(operand(args[0], c, records), operand(args[1], c, records), c.cap);
  } else if (kind == "wreath") {
    need(2);
    g = wreath(operand(args[0], c, records), operand(args[1], c, records), c.cap);
  } else {
    throw InputError("unknown kind " + kind + " (expected cyclic, dihedral, elemabelian, direct, wreath)");
  }
  std::string label = kind + "(";
  for (std::size_t i = 0; i < args.size(); ++i) label += (i ? "," : "") + args[i];
  label += ")";
  const std::string id = id_override.empty() ? std::to_string(g->order()) + "." + label : id_override;
  CatalogRecord rec = to_record(*g, id, std::vector<std::string>{label}, "grpbounds construct");
  validate(rec, 0, c.cap);
  emit(c.out, true, [&](std::ostream& os) { os << to_jsonl(rec) << '\n'; });
  return 0;
}

void add_common(CLI::App* sub, Common& c, bool with_format, bool with_rules = true) {
  sub->add_option("--catalog", c.catalog, "catalog file or fixture directory")->capture_default_str();
  sub->add_option("--out", c.out, "output path (default stdout)");
  if (with_format) sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  if (with_rules) {
    sub->add_option("--rules", c.rules, "bound rules for r': default or none")
        ->check(CLI::IsMember({"default", "none"}))
        ->capture_default_str();
  }
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--cap", c.cap, "maximum group order to enumerate")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group invariants: exponent, generator exponent, class, r and r'"};
  app.require_subcommand(1);

  Common common;
  std::string info_id;
  auto* info = app.add_subcommand("info", "report invariants, r and r' for one catalog group");
  add_common(info, common, false);
  info->add_option("id", info_id, "group id, e.g. 16.7")->required();
  info->add_flag("--no-witness", common.no_witness, "omit series witnesses");

  ScanFilters filters;
  auto* scan = app.add_subcommand("scan", "tabulate invariants over a catalog");
  add_common(scan, common, true);
  scan->add_flag("--nilpotent", filters.nilpotent, "only nilpotent groups");
  scan->add_option("--min-order", filters.min_order, "smallest order to include");
  scan->add_option("--max-order", filters.max_order, "largest order to include");
  scan->add_option("--class", filters.cls, "only groups of this nilpotency class");
  scan->add_flag("--flagged", filters.flagged, "only rows with r > ge or r' > ge");

  auto* verify = app.add_subcommand("verify-paper", "check the built-in claim table against the fixtures");
  add_common(verify, common, true, false);

  std::string kind;
  std::vector<std::string> kind_args;
  std::string construct_id;
  auto* construct = app.add_subcommand("construct", "build a group and append it as a catalog record");
  add_common(construct, common, false);
  construct->add_option("kind", kind, "cyclic N | dihedral ORDER | elemabelian P K | direct A B | wreath G H")
      ->required();
  construct->add_option("args", kind_args, "kind parameters; A, B, G, H are C<n>, D<order> or catalog ids");
  construct->add_option("--id", construct_id, "record id (default <order>.<kind>(<args>))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*info) return cmd_info(common, info_id);
    if (*scan) return cmd_scan(common, filters);
    if (*verify) return cmd_verify(common);
    if (*construct) return cmd_construct(common, kind, kind_args, construct_id);
  } catch (const std::exception& e) {
    std::cerr << "grpbounds: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
