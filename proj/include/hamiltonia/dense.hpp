#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <vector>

#include "perm_group.hpp"

namespace hamiltonia {

// Subgroups are sets of element indices into a DenseGroup's element table.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(static_cast<size_t>((n + 63) / 64), 0) {}

  int size() const { return n_; }
  void set(int i) { w_[static_cast<size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  // true when this set contains every element of `o`
  bool contains_all(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Canonical subgroup order: smaller sets first, ties broken by the smallest
  // differing element (the set containing it sorts first).  Equivalent to
  // comparing sorted element-index arrays lexicographically.
  static int compare(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb ? -1 : 1;
    for (size_t i = 0; i < a.w_.size(); ++i) {
      std::uint64_t diff = a.w_[i] ^ b.w_[i];
      if (diff) {
        std::uint64_t lowest = diff & (~diff + 1);
        return (a.w_[i] & lowest) ? -1 : 1;
      }
    }
    return 0;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetCanonicalLess {
  bool operator()(const Bitset& a, const Bitset& b) const { return Bitset::compare(a, b) < 0; }
};

// Element-indexed multiplication structure over a PermGroup's element table,
// the workhorse behind lattice and predicate computations.  Index 0 is always
// the identity (the table is sorted by image vector).
class DenseGroup {
 public:
  explicit DenseGroup(PermGroup g, const Limits& lim = default_limits()) : g_(std::move(g)) {
    std::int64_t big = g_.order();
    if (big > lim.lattice_cap)
      fail_cap("order " + std::to_string(big) + " exceeds lattice cap " +
               std::to_string(lim.lattice_cap));
    if (big > 65535) fail_cap("order " + std::to_string(big) + " exceeds dense table limit");
    n_ = static_cast<int>(big);
    const auto& elems = g_.elements();
    mul_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int k = g_.element_index(elems[static_cast<size_t>(i)] * elems[static_cast<size_t>(j)]);
        mul_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)] =
            static_cast<std::uint16_t>(k);
      }
    inv_.assign(static_cast<size_t>(n_), 0);
    eord_.assign(static_cast<size_t>(n_), 1);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j)
        if (mul(i, j) == 0) {
          inv_[static_cast<size_t>(i)] = static_cast<std::uint16_t>(j);
          break;
        }
      int k = i, ord = 1;
      while (k != 0) {
        k = mul(k, i);
        ++ord;
      }
      eord_[static_cast<size_t>(i)] = ord;
    }
    for (const Permutation& p : g_.generators()) gen_idx_.push_back(g_.element_index(p));
  }

  const PermGroup& group() const { return g_; }
  int order() const { return n_; }
  int mul(int i, int j) const {
    return mul_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
  }
  int inv(int i) const { return inv_[static_cast<size_t>(i)]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
  int element_order(int i) const { return eord_[static_cast<size_t>(i)]; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  Bitset full_set() const {
    Bitset b(n_);
    for (int i = 0; i < n_; ++i) b.set(i);
    return b;
  }

  Bitset trivial_set() const {
    Bitset b(n_);
    b.set(0);
    return b;
  }

 private:
  PermGroup g_;
  int n_ = 0;
  std::vector<std::uint16_t> mul_, inv_;
  std::vector<int> eord_;
  std::vector<int> gen_idx_;
};

// --------------------------------------------------------------------------
// Subgroup set operations.

inline Bitset subgroup_closure(const DenseGroup& G, const std::vector<int>& seed) {
  Bitset bits(G.order());
  bits.set(0);
  std::vector<int> work{0};
  for (size_t head = 0; head < work.size(); ++head)
    for (int s : seed) {
      int t = G.mul(work[head], s);
      if (!bits.test(t)) {
        bits.set(t);
        work.push_back(t);
      }
    }
  return bits;
}

// Derive a small generating sequence for a member set, greedily over the
// canonical (ascending-index) element order; deterministic, so stored member
// sets always regenerate the same generator lists.
inline std::vector<int> greedy_generator_indices(const DenseGroup& G, const Bitset& h) {
  if (h.count() == 1) return {};
  std::vector<int> gens;
  Bitset cur = G.trivial_set();
  for (int x : h.to_indices()) {
    if (cur.test(x)) continue;
    gens.push_back(x);
    cur = subgroup_closure(G, gens);
    if (cur == h) return gens;
  }
  fail("member set is not a subgroup");
}

inline Bitset subgroup_join(const DenseGroup& G, const Bitset& a, const Bitset& b) {
  if (a.contains_all(b)) return a;
  if (b.contains_all(a)) return b;
  std::vector<int> seed = a.to_indices();
  for (int x : b.to_indices()) seed.push_back(x);
  return subgroup_closure(G, seed);
}

inline Bitset conjugate_subgroup(const DenseGroup& G, const Bitset& h, int g) {
  Bitset out(G.order());
  for (int x : h.to_indices()) out.set(G.conj(x, g));
  return out;
}

// Conjugation by every generator in turn until stable; the stable set is
// normalized by all of G.
inline Bitset normal_closure(const DenseGroup& G, const Bitset& h) {
  Bitset bits = subgroup_closure(G, h.to_indices());
  for (;;) {
    std::vector<int> extra;
    for (int x : bits.to_indices())
      for (int g : G.generator_indices()) {
        int c = G.conj(x, g);
        if (!bits.test(c)) extra.push_back(c);
      }
    if (extra.empty()) return bits;
    std::vector<int> seed = bits.to_indices();
    seed.insert(seed.end(), extra.begin(), extra.end());
    bits = subgroup_closure(G, seed);
  }
}

inline Bitset core_subgroup(const DenseGroup& G, const Bitset& h) {
  std::vector<Bitset> orbit{h};
  Bitset core = h;
  for (size_t head = 0; head < orbit.size(); ++head)
    for (int g : G.generator_indices()) {
      Bitset c = conjugate_subgroup(G, orbit[head], g);
      bool known = false;
      for (const Bitset& o : orbit)
        if (o == c) {
          known = true;
          break;
        }
      if (!known) {
        core &= c;
        orbit.push_back(std::move(c));
      }
    }
  return core;
}

inline Bitset centralizer_set(const DenseGroup& G, const Bitset& s) {
  Bitset out(G.order());
  std::vector<int> idx = s.to_indices();
  for (int x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (int e : idx)
      if (G.mul(x, e) != G.mul(e, x)) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

inline Bitset normalizer_set(const DenseGroup& G, const Bitset& h) {
  Bitset out(G.order());
  std::vector<int> idx = h.to_indices();
  for (int x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (int e : idx)
      if (!h.test(G.conj(e, x))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

inline Bitset commutator_subgroup(const DenseGroup& G, const Bitset& a, const Bitset& b) {
  Bitset seen(G.order());
  std::vector<int> comms;
  for (int x : a.to_indices())
    for (int y : b.to_indices()) {
      int c = G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return subgroup_closure(G, comms);
}

inline bool is_subgroup_normal(const DenseGroup& G, const Bitset& h) {
  for (int g : G.generator_indices())
    for (int x : h.to_indices())
      if (!h.test(G.conj(x, g))) return false;
  return true;
}

inline bool is_abelian_set(const DenseGroup& G, const Bitset& h) {
  std::vector<int> idx = h.to_indices();
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (G.mul(idx[i], idx[j]) != G.mul(idx[j], idx[i])) return false;
  return true;
}

// --------------------------------------------------------------------------
// Series.  Terms descend until stable; the repeated limit term is kept, so
// the last two entries are always equal.

inline std::vector<Bitset> lower_central_series_sets(const DenseGroup& G, const Bitset& h) {
  std::vector<Bitset> terms{h};
  for (;;) {
    Bitset next = commutator_subgroup(G, terms.back(), h);
    terms.push_back(next);
    if (terms[terms.size() - 1] == terms[terms.size() - 2]) break;
  }
  return terms;
}

inline std::vector<Bitset> derived_series_sets(const DenseGroup& G, const Bitset& h) {
  std::vector<Bitset> terms{h};
  for (;;) {
    Bitset next = commutator_subgroup(G, terms.back(), terms.back());
    terms.push_back(next);
    if (terms[terms.size() - 1] == terms[terms.size() - 2]) break;
  }
  return terms;
}

inline bool is_nilpotent_set(const DenseGroup& G, const Bitset& h) {
  return lower_central_series_sets(G, h).back().count() == 1;
}

inline bool is_soluble_set(const DenseGroup& G, const Bitset& h) {
  return derived_series_sets(G, h).back().count() == 1;
}

inline bool is_perfect_set(const DenseGroup& G, const Bitset& h) {
  return commutator_subgroup(G, h, h) == h;
}

}  // namespace hamiltonia
