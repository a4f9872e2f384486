#pragma once

#include <array>
#include <string>
#include <vector>

#include "structure.hpp"

namespace hamiltonia {

// The two subgroup-closed, quotient-closed families the predicates quantify
// over.  Everything below is parametric in the family.
enum class Family { abelian, nilpotent };

inline constexpr std::array<Family, 2> all_families{Family::abelian, Family::nilpotent};

inline const char* family_name(Family f) {
  return f == Family::abelian ? "abelian" : "nilpotent";
}

inline bool family_contains(const DenseGroup& G, const Bitset& h, Family f) {
  return f == Family::abelian ? is_abelian_set(G, h) : is_nilpotent_set(G, h);
}

// Per-family verdicts about a group G, over its full subgroup lattice.
// Witness fields hold the lattice index of the first (canonical-order)
// subgroup violating the property, or -1 when the property holds or fails
// for a reason with no subgroup witness.
struct FamilyAssessment {
  bool in_family = false;
  bool minimal_non = false;    // G outside, every proper subgroup inside
  bool biminimal_non = false;  // G outside, not minimal, every proper subgroup
                               // inside or itself minimal-non
  bool meta = false;           // every subgroup outside the family is normal
  bool para = false;           // G outside, and every non-normal subgroup is
                               // inside or minimal-non
  int minimal_witness = -1;    // proper subgroup outside the family
  int biminimal_witness = -1;  // proper subgroup neither inside nor minimal-non
  int meta_witness = -1;       // non-normal subgroup outside the family
  int para_witness = -1;       // non-normal subgroup neither inside nor minimal-non
  int intersection = -1;       // meet of all subgroups outside the family
                               // (G itself included); the full group when
                               // every subgroup is inside
  std::vector<bool> sub_in_family;     // per lattice index
  std::vector<bool> sub_minimal_non;   // per lattice index
};

struct GroupAssessment {
  bool abelian = false;
  bool nilpotent = false;
  bool soluble = false;
  bool perfect = false;
  bool simple = false;
  bool dedekind = false;    // every subgroup normal
  int dedekind_witness = -1;  // first non-normal subgroup
  int simple_witness = -1;    // first proper nontrivial normal subgroup
  std::array<FamilyAssessment, 2> fam;

  const FamilyAssessment& family(Family f) const { return fam[static_cast<size_t>(f)]; }
};

inline FamilyAssessment assess_family(const SubgroupLattice& L, Family f) {
  const DenseGroup& G = L.ctx();
  const int n = L.size(), full = L.full_index();
  FamilyAssessment a;

  a.sub_in_family.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    a.sub_in_family[static_cast<size_t>(i)] = family_contains(G, L.subgroup(i).members, f);

  a.sub_minimal_non.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (a.sub_in_family[static_cast<size_t>(i)]) continue;
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if (j != i && L.includes(j, i) && !a.sub_in_family[static_cast<size_t>(j)]) minimal = false;
    a.sub_minimal_non[static_cast<size_t>(i)] = minimal;
  }

  a.in_family = a.sub_in_family[static_cast<size_t>(full)];
  a.minimal_non = a.sub_minimal_non[static_cast<size_t>(full)];
  if (!a.in_family && !a.minimal_non)
    for (int j = 0; j < n; ++j)
      if (j != full && !a.sub_in_family[static_cast<size_t>(j)]) {
        a.minimal_witness = j;
        break;
      }

  if (!a.in_family && !a.minimal_non) {
    a.biminimal_non = true;
    for (int j = 0; j < n; ++j) {
      if (j == full) continue;
      if (!a.sub_in_family[static_cast<size_t>(j)] && !a.sub_minimal_non[static_cast<size_t>(j)]) {
        a.biminimal_non = false;
        a.biminimal_witness = j;
        break;
      }
    }
  }

  a.meta = true;
  for (int j = 0; j < n; ++j)
    if (!a.sub_in_family[static_cast<size_t>(j)] && !L.is_normal(j)) {
      a.meta = false;
      a.meta_witness = j;
      break;
    }

  if (!a.in_family) {
    a.para = true;
    for (int j = 0; j < n; ++j) {
      if (L.is_normal(j)) continue;
      if (!a.sub_in_family[static_cast<size_t>(j)] && !a.sub_minimal_non[static_cast<size_t>(j)]) {
        a.para = false;
        a.para_witness = j;
        break;
      }
    }
  }

  Bitset meet = L.subgroup(full).members;
  bool any = false;
  for (int j = 0; j < n; ++j)
    if (!a.sub_in_family[static_cast<size_t>(j)]) {
      meet &= L.subgroup(j).members;
      any = true;
    }
  a.intersection =
      any ? lattice_index_of_set(L, meet, "intersection of non-family subgroups") : full;
  return a;
}

inline GroupAssessment assess(const SubgroupLattice& L) {
  const DenseGroup& G = L.ctx();
  const Bitset& full = L.subgroup(L.full_index()).members;
  GroupAssessment out;
  for (Family f : all_families) out.fam[static_cast<size_t>(f)] = assess_family(L, f);
  out.abelian = out.family(Family::abelian).in_family;
  out.nilpotent = out.family(Family::nilpotent).in_family;
  out.soluble = is_soluble_set(G, full);
  out.perfect = is_perfect_set(G, full) && G.order() > 1;
  out.dedekind = true;
  for (int j = 0; j < L.size(); ++j)
    if (!L.is_normal(j)) {
      out.dedekind = false;
      out.dedekind_witness = j;
      break;
    }
  out.simple = G.order() > 1;
  for (int j = 0; j < L.size() && out.simple; ++j)
    if (j != L.trivial_index() && j != L.full_index() && L.is_normal(j)) {
      out.simple = false;
      out.simple_witness = j;
    }
  return out;
}

}  // namespace hamiltonia
