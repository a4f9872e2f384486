#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "dense.hpp"

namespace hamiltonia {

struct SubgroupHandle {
  Bitset members;
  std::vector<int> gens;  // greedy generators over canonical element order; [] for trivial
  int order = 0;
};

// The complete subgroup lattice: all cyclic subgroups closed under pairwise
// join (every subgroup is an iterated join of cyclic ones, so the fixpoint is
// the full lattice).  Subgroups are sorted canonically - ascending order,
// ties by Bitset::compare - so index 0 is the trivial subgroup and the last
// index is the whole group, and indices are reproducible across runs.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(std::shared_ptr<const DenseGroup> ctx,
                           const Limits& lim = default_limits())
      : ctx_(std::move(ctx)) {
    const DenseGroup& G = *ctx_;
    if (G.order() > lim.lattice_cap)
      fail_cap("order " + std::to_string(G.order()) + " exceeds lattice cap " +
               std::to_string(lim.lattice_cap));
    std::set<Bitset, BitsetCanonicalLess> seen;
    std::vector<Bitset> sets;
    std::vector<std::vector<int>> gens;
    auto insert = [&](const Bitset& b, const std::vector<int>& g) {
      if (!seen.insert(b).second) return;
      sets.push_back(b);
      gens.push_back(g);
      if (sets.size() > kMaxSubgroups)
        fail_cap("subgroup lattice exceeds " + std::to_string(kMaxSubgroups) + " subgroups");
    };
    for (int i = 0; i < G.order(); ++i)
      insert(subgroup_closure(G, {i}), i == 0 ? std::vector<int>{} : std::vector<int>{i});
    for (size_t i = 0; i < sets.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        if (sets[i].contains_all(sets[j]) || sets[j].contains_all(sets[i])) continue;
        std::vector<int> seed = gens[i];
        seed.insert(seed.end(), gens[j].begin(), gens[j].end());
        insert(subgroup_closure(G, seed), seed);
      }
    finalize(std::move(sets));
  }

  // Rebuild from stored member-index arrays (cache path).  Each array must be
  // a multiplication-closed set; the collection must contain the trivial and
  // full subgroups and be duplicate-free, otherwise hamiltonia::error.
  SubgroupLattice(std::shared_ptr<const DenseGroup> ctx,
                  const std::vector<std::vector<int>>& member_sets,
                  const Limits& lim = default_limits())
      : ctx_(std::move(ctx)) {
    const DenseGroup& G = *ctx_;
    if (G.order() > lim.lattice_cap)
      fail_cap("order " + std::to_string(G.order()) + " exceeds lattice cap " +
               std::to_string(lim.lattice_cap));
    std::set<Bitset, BitsetCanonicalLess> seen;
    std::vector<Bitset> sets;
    for (const auto& arr : member_sets) {
      Bitset b(G.order());
      for (int x : arr) {
        if (x < 0 || x >= G.order()) fail("subgroup member index out of range");
        b.set(x);
      }
      for (int x : arr)
        for (int y : arr)
          if (!b.test(G.mul(x, y))) fail("stored member set is not closed");
      if (!b.test(0)) fail("stored member set lacks the identity");
      if (!seen.insert(b).second) fail("duplicate stored subgroup");
      sets.push_back(std::move(b));
    }
    finalize(std::move(sets));
  }

  const DenseGroup& ctx() const { return *ctx_; }
  std::shared_ptr<const DenseGroup> ctx_ptr() const { return ctx_; }

  int size() const { return static_cast<int>(subs_.size()); }
  const SubgroupHandle& subgroup(int i) const { return subs_[static_cast<size_t>(i)]; }
  int trivial_index() const { return 0; }
  int full_index() const { return size() - 1; }

  int index_of(const Bitset& members) const {
    auto it = index_.find(members);
    return it == index_.end() ? -1 : it->second;
  }

  // subgroup[inner] contained in subgroup[outer]
  bool includes(int inner, int outer) const {
    return incl_[static_cast<size_t>(inner)][static_cast<size_t>(outer)];
  }

  bool is_normal(int i) const { return normal_[static_cast<size_t>(i)]; }
  int class_id(int i) const { return class_of_[static_cast<size_t>(i)]; }
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }

 private:
  static constexpr size_t kMaxSubgroups = 5000;

  void finalize(std::vector<Bitset> sets) {
    const DenseGroup& G = *ctx_;
    std::sort(sets.begin(), sets.end(), BitsetCanonicalLess{});
    subs_.reserve(sets.size());
    for (Bitset& b : sets) {
      SubgroupHandle h;
      h.order = b.count();
      h.gens = greedy_generator_indices(G, b);
      h.members = std::move(b);
      subs_.push_back(std::move(h));
    }
    if (subs_.empty() || subs_.front().order != 1 || subs_.back().order != G.order())
      fail("subgroup collection lacks the trivial or full subgroup");
    for (int i = 0; i < size(); ++i) index_[subs_[static_cast<size_t>(i)].members] = i;

    size_t n = subs_.size();
    incl_.assign(n, std::vector<bool>(n, false));
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        incl_[a][b] = subs_[b].members.contains_all(subs_[a].members);

    class_of_.assign(n, -1);
    for (int s = 0; s < size(); ++s) {
      if (class_of_[static_cast<size_t>(s)] >= 0) continue;
      int cid = static_cast<int>(classes_.size());
      std::vector<int> members{s};
      class_of_[static_cast<size_t>(s)] = cid;
      for (size_t head = 0; head < members.size(); ++head)
        for (int g : G.generator_indices()) {
          Bitset c = conjugate_subgroup(G, subs_[static_cast<size_t>(members[head])].members, g);
          int idx = index_of(c);
          if (idx < 0) fail("conjugate of a subgroup is missing from the lattice");
          if (class_of_[static_cast<size_t>(idx)] < 0) {
            class_of_[static_cast<size_t>(idx)] = cid;
            members.push_back(idx);
          }
        }
      std::sort(members.begin(), members.end());
      classes_.push_back(std::move(members));
    }
    normal_.assign(n, false);
    for (size_t i = 0; i < n; ++i)
      normal_[i] = classes_[static_cast<size_t>(class_of_[i])].size() == 1;
  }

  std::shared_ptr<const DenseGroup> ctx_;
  std::vector<SubgroupHandle> subs_;
  std::map<Bitset, int, BitsetCanonicalLess> index_;
  std::vector<std::vector<bool>> incl_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<bool> normal_;
};

inline std::shared_ptr<const DenseGroup> make_dense(PermGroup g,
                                                    const Limits& lim = default_limits()) {
  return std::make_shared<const DenseGroup>(std::move(g), lim);
}

}  // namespace hamiltonia
