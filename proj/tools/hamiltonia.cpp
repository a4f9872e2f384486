// hamiltonia — analyze finite permutation groups, dump subgroup lattices,
// run the family census, and verify the claim catalog.
//
// Exit codes: 0 success/pass, 1 claim failure, 2 usage error, 3 resource cap.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamiltonia/hamiltonia.hpp"

namespace {

using namespace hamiltonia;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string primes_text(const std::vector<long long>& primes) {
  std::string out = "{";
  for (size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(primes[i]);
  }
  return out + "}";
}

std::vector<CatalogEntry> resolve_scope(const std::vector<std::string>& refs,
                                        const Limits& lim) {
  if (refs.empty()) return default_catalog(lim);
  std::vector<CatalogEntry> scope;
  for (const std::string& ref : refs) {
    if (ref == "default") {
      for (CatalogEntry& e : default_catalog(lim)) scope.push_back(std::move(e));
      continue;
    }
    scope.push_back(parse_group_ref(ref, lim));
  }
  if (scope.empty()) fail_parse("verification scope is empty");
  return scope;
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const std::string& ref, Family family, const std::string& format,
                const Limits& lim) {
  Analysis a = analyze_entry(parse_group_ref(ref, lim), lim);
  const SubgroupLattice& L = a.lattice;
  const GroupAssessment& g = a.assessment;
  const FamilyAssessment& f = g.family(family);
  const int frattini = frattini_index(L);
  const int center = center_index(L);
  const std::vector<long long> primes = prime_divisors(a.order);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["group"] = a.label;
    j["ref"] = a.ref;
    j["order"] = a.order;
    j["primes"] = primes;
    j["recognized"] = a.recognized;
    j["abelian"] = g.abelian;
    j["nilpotent"] = g.nilpotent;
    j["soluble"] = g.soluble;
    j["perfect"] = g.perfect;
    j["simple"] = g.simple;
    j["dedekind"] = g.dedekind;
    j["frattini"] = describe_subgroup(L, frattini, lim);
    j["center"] = describe_subgroup(L, center, lim);
    nlohmann::ordered_json fam;
    fam["name"] = family_name(family);
    fam["in_family"] = f.in_family;
    fam["minimal_non"] = f.minimal_non;
    fam["biminimal_non"] = f.biminimal_non;
    fam["meta"] = f.meta;
    fam["para"] = f.para;
    nlohmann::ordered_json wit;
    if (f.minimal_witness >= 0) wit["minimal"] = describe_subgroup(L, f.minimal_witness, lim);
    if (f.biminimal_witness >= 0)
      wit["biminimal"] = describe_subgroup(L, f.biminimal_witness, lim);
    if (f.meta_witness >= 0) wit["meta"] = describe_subgroup(L, f.meta_witness, lim);
    if (f.para_witness >= 0) wit["para"] = describe_subgroup(L, f.para_witness, lim);
    fam["witnesses"] = std::move(wit);
    j["family"] = std::move(fam);
    j["meta"] = nlohmann::ordered_json{{"schema_version", "1"}};
    std::cout << j.dump(1) << "\n";
    return 0;
  }

  auto flag_line = [&](const char* name, bool value, int witness) {
    std::string line = std::string(name) + ": " + yes_no(value);
    if (!value && witness >= 0)
      line += "  (witness: " + describe_subgroup(L, witness, lim) + ")";
    std::cout << line << "\n";
  };

  std::cout << "group: " << a.label << "  (ref " << a.ref << ")\n";
  std::cout << "order: " << a.order << "\n";
  std::cout << "primes: " << primes_text(primes) << "\n";
  std::cout << "recognized: " << a.recognized << "\n";
  std::cout << "abelian: " << yes_no(g.abelian) << "\n";
  std::cout << "nilpotent: " << yes_no(g.nilpotent) << "\n";
  std::cout << "soluble: " << yes_no(g.soluble) << "\n";
  std::cout << "perfect: " << yes_no(g.perfect) << "\n";
  flag_line("simple", g.simple, g.simple_witness);
  flag_line("dedekind", g.dedekind, g.dedekind_witness);
  std::cout << "frattini: " << describe_subgroup(L, frattini, lim) << "\n";
  std::cout << "center: " << describe_subgroup(L, center, lim) << "\n";
  std::cout << "family " << family_name(family) << ":\n";
  std::cout << "  in family: " << yes_no(f.in_family) << "\n";
  auto fam_line = [&](const char* name, bool value, int witness) {
    std::string line = "  " + std::string(name) + ": " + yes_no(value);
    if (!value && witness >= 0)
      line += "  (witness: " + describe_subgroup(L, witness, lim) + ")";
    std::cout << line << "\n";
  };
  fam_line("minimal non", f.minimal_non, f.minimal_witness);
  fam_line("biminimal non", f.biminimal_non, f.biminimal_witness);
  fam_line("meta", f.meta, f.meta_witness);
  fam_line("para", f.para, f.para_witness);
  return 0;
}

// ---------------------------------------------------------------- lattice --

int cmd_lattice(const std::string& ref, const std::string& cache_dir,
                const std::string& format, const Limits& lim) {
  CatalogEntry e = parse_group_ref(ref, lim);
  const std::filesystem::path dir = resolve_cache_dir(cache_dir);
  std::string warning;
  SubgroupLattice L = cached_lattice(dir, e.group, lim, &warning);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  std::cerr << "cache: " << lattice_cache_path(dir, lattice_cache_key(e.group)).string()
            << "\n";

  std::vector<int> normal;
  for (int i = 0; i < L.size(); ++i)
    if (L.is_normal(i)) normal.push_back(i);
  const int classes = static_cast<int>(L.conjugacy_classes().size());

  if (format == "json") {
    nlohmann::ordered_json j;
    j["group"] = e.label;
    j["ref"] = e.ref;
    j["order"] = L.subgroup(L.full_index()).order;
    j["subgroups"] = L.size();
    j["conjugacy_classes"] = classes;
    nlohmann::ordered_json norm = nlohmann::ordered_json::array();
    for (int i : normal) norm.push_back(describe_subgroup(L, i, lim));
    j["normal_subgroups"] = std::move(norm);
    j["meta"] = nlohmann::ordered_json{{"schema_version", "1"}};
    std::cout << j.dump(1) << "\n";
    return 0;
  }

  std::cout << "group: " << e.label << "  (ref " << e.ref << ")\n";
  std::cout << "order: " << L.subgroup(L.full_index()).order << "\n";
  std::cout << "subgroups: " << L.size() << "\n";
  std::cout << "conjugacy classes: " << classes << "\n";
  std::cout << "normal subgroups (" << normal.size() << "):\n";
  for (int i : normal) std::cout << "  " << describe_subgroup(L, i, lim) << "\n";
  return 0;
}

// ----------------------------------------------------------------- census --

int cmd_census(const std::vector<std::string>& scope_refs, std::int64_t max_order,
               bool strict, const std::string& format, const Limits& lim) {
  Workspace ws(resolve_scope(scope_refs, lim), lim);
  std::vector<CensusRow> rows = run_census(ws, max_order, strict);
  if (format == "json")
    std::cout << census_to_json(rows).dump(1) << "\n";
  else
    std::cout << census_to_text(rows);
  return 0;
}

// ----------------------------------------------------------------- verify --

int cmd_verify(const std::vector<std::string>& claim_args,
               const std::vector<std::string>& scope_refs, const std::string& format,
               const Limits& lim) {
  std::vector<ClaimId> claims;
  bool want_all = claim_args.empty();
  for (const std::string& arg : claim_args) {
    if (arg == "all") {
      want_all = true;
      continue;
    }
    std::optional<ClaimId> id = parse_claim(arg);
    if (!id) fail_parse("unknown claim id '" + arg + "'");
    claims.push_back(*id);
  }
  if (want_all) claims.assign(all_claims.begin(), all_claims.end());

  Workspace ws(resolve_scope(scope_refs, lim), lim);
  std::vector<ClaimReport> reports;
  reports.reserve(claims.size());
  bool all_pass = true;
  for (ClaimId id : claims) {
    reports.push_back(check_claim(id, ws));
    all_pass = all_pass && reports.back().pass;
  }

  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ClaimReport& r : reports) arr.push_back(report_to_json(r));
    std::cout << arr.dump(1) << "\n";
  } else {
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << report_to_text(reports[i]);
    }
    std::cout << (all_pass ? "overall: pass" : "overall: FAIL") << " (" << reports.size()
              << " claim" << (reports.size() == 1 ? "" : "s") << ")\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hamiltonia;

  CLI::App app{
      "hamiltonia: finite permutation-group families, subgroup lattices, and claim "
      "verification"};
  app.require_subcommand(1);

  Limits lim = default_limits();
  auto add_cap_options = [&lim](CLI::App* cmd) {
    cmd->add_option("--order-cap", lim.order_cap, "largest admissible group order");
    cmd->add_option("--element-cap", lim.element_cap,
                    "largest materialized element table");
    cmd->add_option("--lattice-cap", lim.lattice_cap,
                    "largest order admitted to lattice work");
    cmd->add_option("--degree-cap", lim.degree_cap, "largest permutation degree");
  };

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
  };

  std::string family_arg = "nilpotent";
  auto add_family = [&family_arg](CLI::App* cmd) {
    cmd->add_option("--family", family_arg, "group family for the family predicates")
        ->check(CLI::IsMember({"abelian", "nilpotent"}))
        ->default_str("nilpotent");
  };

  std::string ref;
  std::vector<std::string> scope_refs;
  std::vector<std::string> claim_args;
  std::string cache_dir;
  std::int64_t max_order = -1;
  bool strict = false;

  CLI::App* analyze =
      app.add_subcommand("analyze", "order, primes, recognition, and family predicates");
  analyze->add_option("ref", ref, "group reference (builtin grammar or .grp file)")
      ->required();
  add_family(analyze);
  add_format(analyze);
  add_cap_options(analyze);

  CLI::App* lattice =
      app.add_subcommand("lattice", "subgroup lattice summary (cached on disk)");
  lattice->add_option("ref", ref, "group reference (builtin grammar or .grp file)")
      ->required();
  lattice->add_option("--cache-dir", cache_dir,
                      "lattice cache directory (default: $HAMILTONIA_CACHE_DIR or "
                      ".hamiltonia-cache)");
  add_format(lattice);
  add_cap_options(lattice);

  CLI::App* census =
      app.add_subcommand("census", "family census table over a group scope");
  census->add_option("--scope", scope_refs,
                     "group references ('default' = builtin catalog)");
  census->add_option("--max-order", max_order, "keep only groups of order <= N");
  census->add_flag("--strict", strict, "treat a cap-exceeded scope member as an error");
  add_format(census);
  add_cap_options(census);

  CLI::App* verify = app.add_subcommand("verify", "run claim verification");
  verify
      ->add_option("--claims", claim_args,
                   "claim ids to run, or 'all' (e.g. T3.6,C3.8)")
      ->delimiter(',');
  verify->add_option("--scope", scope_refs,
                     "group references ('default' = builtin catalog)");
  add_format(verify);
  add_cap_options(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    Family family = family_arg == "abelian" ? Family::abelian : Family::nilpotent;
    if (analyze->parsed())
      rc = cmd_analyze(ref, family, format, lim);
    else if (lattice->parsed())
      rc = cmd_lattice(ref, cache_dir, format, lim);
    else if (census->parsed())
      rc = cmd_census(scope_refs, max_order, strict, format, lim);
    else
      rc = cmd_verify(claim_args, scope_refs, format, lim);
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  std::cerr << "elapsed: " << elapsed << " ms\n";
  return rc;
}
