#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "limits.hpp"
#include "perm.hpp"

namespace hamiltonia {

namespace detail {

// One level of a stabilizer chain: the orbit of `base` under the level's
// strong generators, stored as a Schreier tree (parent point plus generator
// index) so transversal elements are rebuilt on demand instead of held.
struct ChainLevel {
  int base = -1;
  std::vector<Permutation> gens;
  std::vector<int> orbit;   // BFS discovery order; orbit[0] == base
  std::vector<int> parent;  // -1 root, -2 outside the orbit
  std::vector<int> via;     // generator index used to reach the point

  bool in_orbit(int p) const { return parent[static_cast<size_t>(p)] != -2; }

  Permutation transversal(int p, int degree) const {
    std::vector<int> path;
    for (int cur = p; parent[static_cast<size_t>(cur)] != -1; cur = parent[static_cast<size_t>(cur)])
      path.push_back(via[static_cast<size_t>(cur)]);
    Permutation u(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * gens[static_cast<size_t>(*it)];
    return u;
  }
};

}  // namespace detail

// Deterministic Schreier-Sims.  Base points are smallest moved points, orbits
// are explored breadth-first in generator order, so the chain and everything
// derived from it depend only on the generator list.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& gens, const Limits& lim)
      : degree_(degree), order_cap_(lim.order_cap) {
    int base0 = degree;
    for (const Permutation& g : gens)
      if (!g.is_identity()) base0 = std::min(base0, g.smallest_moved_point());
    if (base0 == degree) return;  // trivial group
    push_level(base0);
    for (const Permutation& g : gens)
      if (!g.is_identity()) levels_[0].gens.push_back(g);
    rebuild_orbit(0);
    check_order_cap();
    close(0);
  }

  int degree() const { return degree_; }
  const std::vector<detail::ChainLevel>& levels() const { return levels_; }

  std::int64_t order() const {
    std::int64_t prod = 1;
    for (const auto& level : levels_) prod *= static_cast<std::int64_t>(level.orbit.size());
    return prod;
  }

  // Remainder of sifting g through the chain; identity iff g is a member.
  Permutation sift(Permutation g) const {
    for (const auto& level : levels_) {
      if (g.is_identity()) break;
      int p = g(level.base);
      if (!level.in_orbit(p)) return g;
      g = g * level.transversal(p, degree_).inverse();
    }
    return g;
  }

  bool contains(const Permutation& g) const {
    return g.degree() == degree_ && sift(g).is_identity();
  }

  std::vector<Permutation> elements(int element_cap) const {
    if (order() > element_cap)
      fail_cap("group order " + std::to_string(order()) + " exceeds element cap " +
               std::to_string(element_cap));
    std::vector<Permutation> out{Permutation(degree_)};
    for (size_t lv = levels_.size(); lv-- > 0;) {
      std::vector<Permutation> transversals;
      transversals.reserve(levels_[lv].orbit.size());
      for (int p : levels_[lv].orbit) transversals.push_back(levels_[lv].transversal(p, degree_));
      std::vector<Permutation> next;
      next.reserve(out.size() * transversals.size());
      for (const Permutation& h : out)
        for (const Permutation& t : transversals) next.push_back(h * t);
      out = std::move(next);
    }
    return out;
  }

 private:
  void push_level(int base) {
    detail::ChainLevel level;
    level.base = base;
    levels_.push_back(std::move(level));
    rebuild_orbit(levels_.size() - 1);
  }

  void rebuild_orbit(size_t lv) {
    detail::ChainLevel& level = levels_[lv];
    level.parent.assign(static_cast<size_t>(degree_), -2);
    level.via.assign(static_cast<size_t>(degree_), -1);
    level.orbit.clear();
    level.orbit.push_back(level.base);
    level.parent[static_cast<size_t>(level.base)] = -1;
    for (size_t head = 0; head < level.orbit.size(); ++head) {
      int p = level.orbit[head];
      for (size_t si = 0; si < level.gens.size(); ++si) {
        int q = level.gens[si](p);
        if (level.parent[static_cast<size_t>(q)] == -2) {
          level.parent[static_cast<size_t>(q)] = p;
          level.via[static_cast<size_t>(q)] = static_cast<int>(si);
          level.orbit.push_back(q);
        }
      }
    }
  }

  void check_order_cap() const {
    std::int64_t prod = 1;
    for (const auto& level : levels_) {
      auto sz = static_cast<std::int64_t>(level.orbit.size());
      if (prod > order_cap_ / sz)
        fail_cap("group order exceeds order cap " + std::to_string(order_cap_));
      prod *= sz;
    }
  }

  Permutation sift_from(Permutation g, size_t from) const {
    for (size_t lv = from; lv < levels_.size(); ++lv) {
      if (g.is_identity()) break;
      int p = g(levels_[lv].base);
      if (!levels_[lv].in_orbit(p)) return g;
      g = g * levels_[lv].transversal(p, degree_).inverse();
    }
    return g;
  }

  // Close level k: every Schreier generator of (gens, base, orbit) must sift
  // to the identity through the deeper chain; remainders become strong
  // generators one level down, which is then re-closed recursively.  Level k
  // itself never changes during the call, but levels_ may reallocate, so the
  // sweep runs over a snapshot.
  void close(size_t k) {
    detail::ChainLevel snapshot = levels_[k];
    for (int p : snapshot.orbit) {
      Permutation up = snapshot.transversal(p, degree_);
      for (const Permutation& s : snapshot.gens) {
        Permutation h = sift_from(up * s * snapshot.transversal(s(p), degree_).inverse(), k + 1);
        if (h.is_identity()) continue;
        if (k + 1 == levels_.size()) push_level(h.smallest_moved_point());
        levels_[k + 1].gens.push_back(std::move(h));
        rebuild_orbit(k + 1);
        check_order_cap();
        close(k + 1);
      }
    }
  }

  int degree_;
  std::int64_t order_cap_;
  std::vector<detail::ChainLevel> levels_;
};

// A permutation group with a stabilizer chain and, when the order permits, a
// sorted element table.  The table is ordered by image vector, which puts the
// identity at index 0; that order is the canonical element order used
// throughout (witness indices, subgroup storage, caches).
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators, const Limits& lim = default_limits())
      : degree_(degree),
        gens_(validated(degree, std::move(generators), lim)),
        chain_(degree, gens_, lim) {
    if (chain_.order() <= lim.element_cap) {
      elems_ = chain_.elements(lim.element_cap);
      std::sort(elems_.begin(), elems_.end());
      table_ = true;
    }
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const StabilizerChain& chain() const { return chain_; }
  std::int64_t order() const { return chain_.order(); }
  bool contains(const Permutation& g) const { return chain_.contains(g); }

  bool has_element_table() const { return table_; }

  const std::vector<Permutation>& elements() const {
    if (!table_)
      fail_cap("element table not materialized: order " + std::to_string(order()) +
               " exceeds the element cap used at construction");
    return elems_;
  }

  int element_index(const Permutation& g) const {
    const auto& v = elements();
    auto it = std::lower_bound(v.begin(), v.end(), g);
    if (it != v.end() && *it == g) return static_cast<int>(it - v.begin());
    return -1;
  }

  const Permutation& element(int i) const { return elements()[static_cast<size_t>(i)]; }

 private:
  static std::vector<Permutation> validated(int degree, std::vector<Permutation> gens,
                                            const Limits& lim) {
    if (degree < 0) fail("negative degree");
    if (degree > lim.degree_cap)
      fail_cap("degree " + std::to_string(degree) + " exceeds degree cap " +
               std::to_string(lim.degree_cap));
    std::vector<Permutation> out;
    for (Permutation& g : gens) {
      if (g.degree() != degree) fail("generator degree mismatch");
      if (!g.is_identity()) out.push_back(std::move(g));
    }
    return out;
  }

  int degree_;
  std::vector<Permutation> gens_;
  StabilizerChain chain_;
  std::vector<Permutation> elems_;
  bool table_ = false;
};

inline PermGroup group_from_generators(int degree, const std::vector<Permutation>& gens,
                                       const Limits& lim = default_limits()) {
  return PermGroup(degree, gens, lim);
}

}  // namespace hamiltonia
