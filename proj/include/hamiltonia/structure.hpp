#pragma once

#include <string>
#include <vector>

#include "gf.hpp"
#include "lattice.hpp"

namespace hamiltonia {

inline int lattice_index_of_set(const SubgroupLattice& L, const Bitset& b, const char* what) {
  int idx = L.index_of(b);
  if (idx < 0) fail(std::string("internal error: ") + what + " is missing from the lattice");
  return idx;
}

struct NormalityData {
  bool normal = false;
  int closure_index = -1;  // smallest normal subgroup containing it
  int core_index = -1;     // largest normal subgroup inside it
};

inline NormalityData normality_data(const SubgroupLattice& L, int sub) {
  NormalityData d;
  d.normal = L.is_normal(sub);
  if (d.normal) {
    d.closure_index = d.core_index = sub;
    return d;
  }
  const Bitset& h = L.subgroup(sub).members;
  d.closure_index = lattice_index_of_set(L, normal_closure(L.ctx(), h), "normal closure");
  d.core_index = lattice_index_of_set(L, core_subgroup(L.ctx(), h), "core");
  return d;
}

inline int normalizer_index(const SubgroupLattice& L, int sub) {
  return lattice_index_of_set(L, normalizer_set(L.ctx(), L.subgroup(sub).members), "normalizer");
}

inline int centralizer_index(const SubgroupLattice& L, int sub) {
  return lattice_index_of_set(L, centralizer_set(L.ctx(), L.subgroup(sub).members), "centralizer");
}

inline int center_index(const SubgroupLattice& L) {
  return centralizer_index(L, L.full_index());
}

enum class SeriesKind { lower_central, derived };

struct SeriesResult {
  std::vector<int> terms;  // lattice indices, descending; the last two are equal
  int limit = -1;          // terms.back()
};

inline SeriesResult series(const SubgroupLattice& L, SeriesKind kind) {
  const Bitset& full = L.subgroup(L.full_index()).members;
  std::vector<Bitset> sets = kind == SeriesKind::lower_central
                                 ? lower_central_series_sets(L.ctx(), full)
                                 : derived_series_sets(L.ctx(), full);
  SeriesResult r;
  for (const Bitset& b : sets) r.terms.push_back(lattice_index_of_set(L, b, "series term"));
  r.limit = r.terms.back();
  return r;
}

// Proper subgroups of `of` with nothing strictly between them and `of`.
inline std::vector<int> maximal_subgroups(const SubgroupLattice& L, int of) {
  std::vector<int> below;
  for (int j = 0; j < L.size(); ++j)
    if (j != of && L.includes(j, of)) below.push_back(j);
  std::vector<int> out;
  for (int x : below) {
    bool maximal = true;
    for (int y : below)
      if (y != x && L.includes(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

// Frattini subgroup of a lattice member: intersection of its maximal
// subgroups, the member itself when it has none (the trivial subgroup).
inline int frattini_index(const SubgroupLattice& L, int of) {
  std::vector<int> maxs = maximal_subgroups(L, of);
  if (maxs.empty()) return of;
  Bitset b = L.subgroup(maxs.front()).members;
  for (size_t i = 1; i < maxs.size(); ++i) b &= L.subgroup(maxs[i]).members;
  return lattice_index_of_set(L, b, "Frattini subgroup");
}

inline int frattini_index(const SubgroupLattice& L) { return frattini_index(L, L.full_index()); }

// First lattice subgroup whose order is the full p-part of |G|; p must be
// prime.  When p does not divide |G| this is the trivial subgroup.
inline int sylow_index(const SubgroupLattice& L, long long p) {
  if (!is_prime(p)) fail_parse("sylow prime " + std::to_string(p) + " is not prime");
  long long n = L.ctx().order(), part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  for (int i = 0; i < L.size(); ++i)
    if (L.subgroup(i).order == part) return i;
  fail("internal error: no subgroup of full p-power order");
}

inline std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// The quotient h/k as a permutation group acting on the right cosets of k,
// with point c being the c-th coset in ascending order of minimal element
// index (so the coset of the identity is point 0).  k must be normal in h.
inline PermGroup quotient_by(const DenseGroup& G, const Bitset& h, const Bitset& k,
                             const Limits& lim = default_limits()) {
  if (!h.contains_all(k)) fail("quotient kernel is not contained in the subgroup");
  std::vector<int> hidx = h.to_indices(), kidx = k.to_indices();
  for (int x : kidx)
    for (int y : hidx)
      if (!k.test(G.conj(x, y))) fail("quotient kernel is not normal in the subgroup");

  std::vector<int> coset_of(static_cast<size_t>(G.order()), -1);
  int cosets = 0;
  for (int x : hidx) {  // ascending, so the first member hit is the minimum
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    for (int e : kidx) coset_of[static_cast<size_t>(G.mul(e, x))] = cosets;
    ++cosets;
  }
  if (cosets * static_cast<int>(kidx.size()) != static_cast<int>(hidx.size()))
    fail("internal error: coset partition mismatch");

  std::vector<int> reps(static_cast<size_t>(cosets), -1);
  for (int x : hidx) {
    int c = coset_of[static_cast<size_t>(x)];
    if (reps[static_cast<size_t>(c)] < 0) reps[static_cast<size_t>(c)] = x;
  }
  std::vector<Permutation> gens;
  for (int g : greedy_generator_indices(G, h)) {
    std::vector<int> img(static_cast<size_t>(cosets));
    for (int c = 0; c < cosets; ++c)
      img[static_cast<size_t>(c)] = coset_of[static_cast<size_t>(G.mul(reps[static_cast<size_t>(c)], g))];
    gens.emplace_back(std::move(img));
  }
  PermGroup q(cosets, gens, lim);
  if (q.order() != cosets) fail("internal error: quotient action is not regular");
  return q;
}

inline PermGroup quotient_group(const SubgroupLattice& L, int normal_sub,
                                const Limits& lim = default_limits()) {
  if (!L.is_normal(normal_sub)) fail("quotient by a non-normal subgroup");
  return quotient_by(L.ctx(), L.subgroup(L.full_index()).members,
                     L.subgroup(normal_sub).members, lim);
}

// A lattice member as a standalone permutation group (same degree as the
// parent), generated by its stored canonical generators.
inline PermGroup subgroup_perm_group(const SubgroupLattice& L, int idx,
                                     const Limits& lim = default_limits()) {
  std::vector<Permutation> gens;
  for (int gi : L.subgroup(idx).gens) gens.push_back(L.ctx().group().element(gi));
  return PermGroup(L.ctx().group().degree(), gens, lim);
}

}  // namespace hamiltonia
