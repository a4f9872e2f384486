#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lattice.hpp"

namespace hamiltonia {

// Subgroup lattices are the expensive artifact, so they persist to disk keyed
// by a hash of the group's construction (format version, degree, canonical
// generator cycles).  A cache file is never an authority: anything stale,
// mismatched or damaged is ignored with a warning and the lattice is rebuilt.

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

inline std::string lattice_cache_key(const PermGroup& g) {
  std::string material = "v1|" + std::to_string(g.degree());
  for (const Permutation& p : g.generators()) material += "|" + to_cycles(p);
  return hex64(fnv1a64(material));
}

inline std::filesystem::path lattice_cache_path(const std::filesystem::path& dir,
                                                const std::string& key) {
  return dir / (key + ".lattice.json");
}

// Cache directory resolution: explicit flag, then HAMILTONIA_CACHE_DIR, then
// a dot-directory under the working directory.
inline std::filesystem::path resolve_cache_dir(const std::string& flag_value = "") {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("HAMILTONIA_CACHE_DIR"); env && *env) return env;
  return ".hamiltonia-cache";
}

namespace detail {

inline void append_warning(std::string* warning, const std::string& msg) {
  if (!warning) return;
  if (!warning->empty()) *warning += "; ";
  *warning += msg;
}

// Checksum over the stored member arrays, so a file that decodes but lost a
// subgroup (or gained garbage) is still detected.
inline std::string subgroups_content_hash(const std::vector<std::vector<int>>& sets) {
  std::string material;
  for (const std::vector<int>& s : sets) {
    for (int x : s) {
      material += std::to_string(x);
      material += ',';
    }
    material += ';';
  }
  return hex64(fnv1a64(material));
}

}  // namespace detail

// Returns false (with a warning) when the directory or file cannot be
// written; a missing cache is an inconvenience, never a failure.
inline bool save_lattice_cache(const std::filesystem::path& dir, const PermGroup& g,
                               const SubgroupLattice& L, std::string* warning = nullptr) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    detail::append_warning(warning, "cannot create cache directory " + dir.string() +
                                        " (" + ec.message() + ")");
    return false;
  }
  std::vector<std::vector<int>> sets;
  sets.reserve(static_cast<size_t>(L.size()));
  for (int i = 0; i < L.size(); ++i) sets.push_back(L.subgroup(i).members.to_indices());

  nlohmann::ordered_json j;
  j["format_version"] = "1";
  j["hash"] = lattice_cache_key(g);
  j["degree"] = g.degree();
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const Permutation& p : g.generators()) gens.push_back(to_cycles(p));
  j["generators"] = std::move(gens);
  j["subgroups"] = sets;
  j["content_hash"] = detail::subgroups_content_hash(sets);

  const fs::path file = lattice_cache_path(dir, lattice_cache_key(g));
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      detail::append_warning(warning, "cannot write cache file " + file.string());
      return false;
    }
    out << j.dump(1) << "\n";
    if (!out) {
      detail::append_warning(warning, "short write to cache file " + file.string());
      return false;
    }
  }
  fs::rename(tmp, file, ec);
  if (ec) {
    detail::append_warning(warning, "cannot finalize cache file " + file.string() + " (" +
                                        ec.message() + ")");
    return false;
  }
  return true;
}

// Loads the lattice for `g` from `dir` if a matching, intact cache file
// exists.  Absent file: quiet nullopt.  Anything else wrong - version or key
// mismatch, decode failure, member arrays that fail the lattice's own
// structural validation - sets a warning and returns nullopt so the caller
// rebuilds.  Resource-cap errors propagate: a cache hit must not bypass caps.
inline std::optional<SubgroupLattice> load_lattice_cache(
    const std::filesystem::path& dir, const PermGroup& g,
    std::shared_ptr<const DenseGroup> ctx, const Limits& lim = default_limits(),
    std::string* warning = nullptr) {
  namespace fs = std::filesystem;
  const std::string key = lattice_cache_key(g);
  const fs::path file = lattice_cache_path(dir, key);
  std::error_code ec;
  if (!fs::exists(file, ec) || ec) return std::nullopt;
  auto reject = [&](const std::string& why) {
    detail::append_warning(warning, "ignoring cache file " + file.string() + ": " + why +
                                        "; rebuilding the lattice");
    return std::nullopt;
  };
  try {
    std::ifstream in(file);
    if (!in) return reject("cannot open");
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("format_version", std::string()) != "1")
      return reject("unsupported format version");
    if (j.value("hash", std::string()) != key) return reject("key mismatch");
    if (j.value("degree", -1) != g.degree()) return reject("degree mismatch");
    std::vector<std::string> gens = j.value("generators", std::vector<std::string>{});
    if (gens.size() != g.generators().size()) return reject("generator mismatch");
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] != to_cycles(g.generators()[i])) return reject("generator mismatch");
    if (!j.contains("subgroups") || !j["subgroups"].is_array())
      return reject("missing subgroup table");
    if (j["subgroups"].size() > 5000) return reject("implausible subgroup count");
    std::vector<std::vector<int>> sets = j["subgroups"].get<std::vector<std::vector<int>>>();
    if (j.value("content_hash", std::string()) != detail::subgroups_content_hash(sets))
      return reject("content checksum mismatch");
    return SubgroupLattice(std::move(ctx), sets, lim);
  } catch (const cap_error&) {
    throw;
  } catch (const std::exception& e) {
    return reject(e.what());
  }
}

// Load-or-build-and-save.  `warning` (when non-null) collects any cache
// anomalies encountered along the way; the returned lattice is always valid.
inline SubgroupLattice cached_lattice(const std::filesystem::path& dir, const PermGroup& g,
                                      const Limits& lim = default_limits(),
                                      std::string* warning = nullptr) {
  std::shared_ptr<const DenseGroup> ctx = make_dense(g, lim);
  if (std::optional<SubgroupLattice> L = load_lattice_cache(dir, g, ctx, lim, warning))
    return std::move(*L);
  SubgroupLattice L(std::move(ctx), lim);
  save_lattice_cache(dir, g, L, warning);
  return L;
}

}  // namespace hamiltonia
