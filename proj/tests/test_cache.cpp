// Lattice cache: the independently computed lattice is the oracle; a loaded
// lattice must match it bitset-for-bitset, and every kind of damaged or
// mismatched file must be rejected with a warning and rebuilt, never trusted.
#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "hamiltonia/cache.hpp"
#include "hamiltonia/catalog.hpp"

using namespace hamiltonia;
namespace fs = std::filesystem;

namespace {

fs::path test_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "hamiltonia-cache-tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spew(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cache keys are stable per construction and distinct across constructions") {
  PermGroup s4a = build_symmetric(4), s4b = build_symmetric(4);
  CHECK(lattice_cache_key(s4a) == lattice_cache_key(s4b));
  CHECK(lattice_cache_key(s4a).size() == 16);
  CHECK(lattice_cache_key(build_symmetric(4)) != lattice_cache_key(build_alternating(4)));
  // Isomorphic but differently constructed groups key separately on purpose:
  // the key identifies the construction, not the isomorphism class.
  CHECK(lattice_cache_key(parse_group_ref("psl:2:5").group) !=
        lattice_cache_key(parse_group_ref("alt:5").group));
}

TEST_CASE("cache directory resolution: flag beats environment beats default") {
  ::setenv("HAMILTONIA_CACHE_DIR", "/tmp/from-env", 1);
  CHECK(resolve_cache_dir("/tmp/from-flag") == fs::path("/tmp/from-flag"));
  CHECK(resolve_cache_dir("") == fs::path("/tmp/from-env"));
  ::unsetenv("HAMILTONIA_CACHE_DIR");
  CHECK(resolve_cache_dir("") == fs::path(".hamiltonia-cache"));
}

TEST_CASE("cache round-trip preserves every catalog lattice bitset-for-bitset") {
  fs::path dir = test_dir("roundtrip");
  for (const CatalogEntry& e : default_catalog()) {
    INFO(e.label);
    std::shared_ptr<const DenseGroup> ctx = make_dense(e.group);
    SubgroupLattice fresh(ctx);
    REQUIRE(save_lattice_cache(dir, e.group, fresh));
    std::string warning;
    std::optional<SubgroupLattice> loaded =
        load_lattice_cache(dir, e.group, ctx, default_limits(), &warning);
    REQUIRE(loaded.has_value());
    CHECK(warning.empty());
    REQUIRE(loaded->size() == fresh.size());
    for (int i = 0; i < fresh.size(); ++i) {
      REQUIRE(loaded->subgroup(i).members == fresh.subgroup(i).members);
      REQUIRE(loaded->subgroup(i).order == fresh.subgroup(i).order);
      REQUIRE(loaded->subgroup(i).gens == fresh.subgroup(i).gens);
      REQUIRE(loaded->is_normal(i) == fresh.is_normal(i));
      REQUIRE(loaded->class_id(i) == fresh.class_id(i));
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("cached_lattice builds, persists, then reuses") {
  fs::path dir = test_dir("reuse");
  PermGroup g = build_symmetric(4);
  const fs::path file = lattice_cache_path(dir, lattice_cache_key(g));

  std::string warning;
  SubgroupLattice first = cached_lattice(dir, g, default_limits(), &warning);
  CHECK(warning.empty());
  CHECK(first.size() == 30);
  REQUIRE(fs::exists(file));

  // A second call must be served from the file: wipe the file afterwards and
  // confirm a third call recreates it (so the second call did not rewrite).
  std::string before = slurp(file);
  SubgroupLattice second = cached_lattice(dir, g, default_limits(), &warning);
  CHECK(warning.empty());
  CHECK(second.size() == 30);
  CHECK(slurp(file) == before);

  fs::remove(file);
  SubgroupLattice third = cached_lattice(dir, g, default_limits(), &warning);
  CHECK(warning.empty());  // absence is quiet
  CHECK(fs::exists(file));
  CHECK(slurp(file) == before);  // byte-identical regeneration
  fs::remove_all(dir);
}

TEST_CASE("damaged cache files are rejected with a warning and rebuilt") {
  fs::path dir = test_dir("damage");
  PermGroup g = build_symmetric(4);
  const fs::path file = lattice_cache_path(dir, lattice_cache_key(g));
  std::shared_ptr<const DenseGroup> ctx = make_dense(g);
  SubgroupLattice fresh(ctx);
  REQUIRE(save_lattice_cache(dir, g, fresh));
  const std::string good = slurp(file);

  SECTION("unparseable bytes") {
    spew(file, "not json at all {{{");
    std::string warning;
    CHECK_FALSE(load_lattice_cache(dir, g, ctx, default_limits(), &warning).has_value());
    CHECK(contains(warning, "ignoring cache file"));

    // cached_lattice recovers, warns, and repairs the file.
    warning.clear();
    SubgroupLattice repaired = cached_lattice(dir, g, default_limits(), &warning);
    CHECK(repaired.size() == 30);
    CHECK(contains(warning, "rebuilding"));
    CHECK(slurp(file) == good);
  }

  SECTION("format version from the future") {
    std::string tampered = good;
    size_t pos = tampered.find("\"format_version\": \"1\"");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 21, "\"format_version\": \"9\"");
    spew(file, tampered);
    std::string warning;
    CHECK_FALSE(load_lattice_cache(dir, g, ctx, default_limits(), &warning).has_value());
    CHECK(contains(warning, "format version"));
  }

  SECTION("file stored under another group's key") {
    PermGroup other = build_alternating(4);
    const fs::path other_file = lattice_cache_path(dir, lattice_cache_key(other));
    fs::copy_file(file, other_file);
    std::string warning;
    std::shared_ptr<const DenseGroup> other_ctx = make_dense(other);
    CHECK_FALSE(
        load_lattice_cache(dir, other, other_ctx, default_limits(), &warning).has_value());
    CHECK(contains(warning, "key mismatch"));
  }

  SECTION("dropped subgroup trips the content checksum") {
    nlohmann::json j = nlohmann::json::parse(good);
    REQUIRE(j["subgroups"].size() == 30);
    j["subgroups"].erase(7);
    spew(file, j.dump());
    std::string warning;
    CHECK_FALSE(load_lattice_cache(dir, g, ctx, default_limits(), &warning).has_value());
    CHECK(contains(warning, "checksum"));
  }

  SECTION("member array that is not a subgroup trips structural validation") {
    nlohmann::json j = nlohmann::json::parse(good);
    // Damage one member set by removing an element, then refresh the
    // checksum so only the structural check can catch it.
    for (auto& arr : j["subgroups"])
      if (arr.size() == 4) {
        arr.erase(3);
        break;
      }
    std::vector<std::vector<int>> sets = j["subgroups"].get<std::vector<std::vector<int>>>();
    std::string material;
    for (const auto& s : sets) {
      for (int x : s) {
        material += std::to_string(x);
        material += ',';
      }
      material += ';';
    }
    j["content_hash"] = hex64(fnv1a64(material));
    spew(file, j.dump());
    std::string warning;
    CHECK_FALSE(load_lattice_cache(dir, g, ctx, default_limits(), &warning).has_value());
    CHECK(contains(warning, "rebuilding"));
  }

  fs::remove_all(dir);
}

TEST_CASE("unwritable cache directories degrade to a warning, not a failure") {
  std::string warning;
  PermGroup g = build_cyclic(6);
  SubgroupLattice L = cached_lattice("/proc/no-such-dir/cache", g, default_limits(), &warning);
  CHECK(L.size() == 4);  // C6: 1, C2, C3, C6
  CHECK_FALSE(warning.empty());
}
