#include <catch2/catch_amalgamated.hpp>

#include "hamiltonia/catalog.hpp"
#include "hamiltonia/lattice.hpp"
#include "oracle.hpp"

using namespace hamiltonia;

namespace {

SubgroupLattice lattice_of(PermGroup g) { return SubgroupLattice(make_dense(std::move(g))); }

std::vector<int> subgroup_orders(const SubgroupLattice& l) {
  std::vector<int> out;
  for (int i = 0; i < l.size(); ++i) out.push_back(l.subgroup(i).order);
  return out;
}

}  // namespace

TEST_CASE("cyclic group lattice is the divisor lattice") {
  SubgroupLattice l = lattice_of(build_cyclic(6));
  CHECK(subgroup_orders(l) == std::vector<int>{1, 2, 3, 6});
  for (int i = 0; i < l.size(); ++i) CHECK(l.is_normal(i));
  CHECK(l.conjugacy_classes().size() == 4);

  SubgroupLattice l12 = lattice_of(build_cyclic(12));
  CHECK(subgroup_orders(l12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("frozen subgroup counts") {
  CHECK(lattice_of(build_symmetric(4)).size() == 30);
  CHECK(lattice_of(build_alternating(5)).size() == 59);
  CHECK(lattice_of(build_matrix_group(MatrixKind::SL, 2, 5)).size() == 76);
}

TEST_CASE("alternating group on five points: classes and normality") {
  SubgroupLattice l = lattice_of(build_alternating(5));
  CHECK(l.conjugacy_classes().size() == 9);
  int normal = 0;
  for (int i = 0; i < l.size(); ++i)
    if (l.is_normal(i)) ++normal;
  CHECK(normal == 2);  // only the trivial subgroup and the whole group

  // class sizes: 1, 15xC2, 10xC3, 5xV4, 6xC5, 10xS3, 6xD10, 5xA4, 1xA5
  std::map<int, int> order_counts;
  for (int i = 0; i < l.size(); ++i) ++order_counts[l.subgroup(i).order];
  CHECK(order_counts == std::map<int, int>{
                            {1, 1}, {2, 15}, {3, 10}, {4, 5}, {5, 6}, {6, 10}, {10, 6}, {12, 5}, {60, 1}});
}

TEST_CASE("symmetric group on four points class structure") {
  SubgroupLattice l = lattice_of(build_symmetric(4));
  CHECK(l.conjugacy_classes().size() == 11);
  std::vector<int> normal_orders;
  for (int i = 0; i < l.size(); ++i)
    if (l.is_normal(i)) normal_orders.push_back(l.subgroup(i).order);
  CHECK(normal_orders == std::vector<int>{1, 4, 12, 24});
}

TEST_CASE("canonical ordering and indexing") {
  SubgroupLattice l = lattice_of(build_symmetric(4));
  CHECK(l.subgroup(l.trivial_index()).order == 1);
  CHECK(l.subgroup(l.full_index()).order == 24);
  for (int i = 1; i < l.size(); ++i) {
    const Bitset& prev = l.subgroup(i - 1).members;
    const Bitset& cur = l.subgroup(i).members;
    CHECK(Bitset::compare(prev, cur) < 0);
  }
  for (int i = 0; i < l.size(); ++i) {
    CHECK(l.index_of(l.subgroup(i).members) == i);
    CHECK(l.includes(l.trivial_index(), i));
    CHECK(l.includes(i, l.full_index()));
    CHECK(l.includes(i, i));
  }
  Bitset absent(l.ctx().order());
  absent.set(0);
  absent.set(1);
  absent.set(2);
  if (l.index_of(absent) >= 0) CHECK(l.subgroup(l.index_of(absent)).order == 3);
}

TEST_CASE("subgroup generators regenerate their subgroup") {
  SubgroupLattice l = lattice_of(build_dicyclic(3));
  for (int i = 0; i < l.size(); ++i) {
    const SubgroupHandle& h = l.subgroup(i);
    CHECK(subgroup_closure(l.ctx(), h.gens) == h.members);
    CHECK(static_cast<int>(h.gens.size()) <= 5);
  }
}

TEST_CASE("lattice matches subset-closure enumeration up to order 16") {
  for (const auto& e : default_catalog()) {
    if (e.group.order() > 16) continue;
    SubgroupLattice l = lattice_of(e.group);
    auto brute = oracle::subgroups_upto(e.group.elements(), e.group.degree(), 4);
    REQUIRE(static_cast<int>(brute.size()) == l.size());
    // each brute subgroup appears in the lattice
    for (const auto& sub : brute) {
      Bitset b(l.ctx().order());
      for (const auto& img : sub) b.set(l.ctx().group().element_index(Permutation(img)));
      CHECK(l.index_of(b) >= 0);
    }
  }
}

TEST_CASE("lattice construction is reproducible") {
  PermGroup g = build_matrix_group(MatrixKind::SL, 2, 3);
  SubgroupLattice a = lattice_of(g), b = lattice_of(g);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) {
    CHECK(a.subgroup(i).members == b.subgroup(i).members);
    CHECK(a.subgroup(i).gens == b.subgroup(i).gens);
    CHECK(a.class_id(i) == b.class_id(i));
  }
}

TEST_CASE("lattice can be rebuilt from stored member arrays") {
  auto ctx = make_dense(build_dihedral(12));
  SubgroupLattice l(ctx);
  std::vector<std::vector<int>> arrays;
  for (int i = 0; i < l.size(); ++i) arrays.push_back(l.subgroup(i).members.to_indices());
  SubgroupLattice back(ctx, arrays);
  REQUIRE(back.size() == l.size());
  for (int i = 0; i < l.size(); ++i) {
    CHECK(back.subgroup(i).members == l.subgroup(i).members);
    CHECK(back.subgroup(i).gens == l.subgroup(i).gens);
    CHECK(back.is_normal(i) == l.is_normal(i));
  }
}

TEST_CASE("stored member arrays are validated") {
  auto ctx = make_dense(build_cyclic(6));
  SubgroupLattice l(ctx);
  std::vector<std::vector<int>> arrays;
  for (int i = 0; i < l.size(); ++i) arrays.push_back(l.subgroup(i).members.to_indices());

  auto corrupt = arrays;
  corrupt[1] = {0, 1, 2};  // powers of the rotation: 1 * 2 lands outside the set
  CHECK_THROWS_AS(SubgroupLattice(ctx, corrupt), error);

  auto missing_full = arrays;
  missing_full.pop_back();
  CHECK_THROWS_AS(SubgroupLattice(ctx, missing_full), error);

  auto out_of_range = arrays;
  out_of_range[1] = {0, 99};
  CHECK_THROWS_AS(SubgroupLattice(ctx, out_of_range), error);
}

TEST_CASE("lattice caps") {
  CHECK_THROWS_AS(make_dense(build_cyclic(500)), cap_error);
  Limits tight;
  tight.lattice_cap = 10;
  CHECK_THROWS_AS(make_dense(build_cyclic(30), tight), cap_error);
}
