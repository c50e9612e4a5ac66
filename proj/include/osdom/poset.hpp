#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osdom/graph.hpp"

namespace osdom {

enum class UpDownMode { up, down, common_up, common_down };

/// Finite poset: Hasse diagram stored canonically, strict-order closure
/// cached as one bitmask per element. All order queries are O(1) mask
/// lookups; values are immutable after build and safe to share.
class Poset {
 public:
  /// Builds from an arbitrary acyclic strict-relation pair list. Shortcut
  /// (non-cover) pairs are accepted and reduced away; a directed cycle is
  /// a CycleError, an out-of-range id an IndexError.
  static Poset build(int n, const std::vector<std::pair<int, int>>& pairs,
                     std::vector<std::string> labels = {});

  int n() const { return n_; }

  /// Strict order a < b.
  bool less(int a, int b) const { return has_bit(up_[static_cast<std::size_t>(a)], b); }
  bool comparable(int a, int b) const { return a != b && (less(a, b) || less(b, a)); }

  Bits strict_up(int a) const { return up_[static_cast<std::size_t>(a)]; }
  Bits strict_down(int a) const { return down_[static_cast<std::size_t>(a)]; }
  Bits covers_up(int a) const { return cover_up_[static_cast<std::size_t>(a)]; }

  /// Cover pairs (a, b) with a prec b, sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  Bits max_set() const { return max_; }
  Bits min_set() const { return min_; }
  Bits mid_set() const { return mid_; }
  Bits elements() const { return full_mask(n_); }

  /// U_P, D_P, CU_P, CD_P of an element set. The common variants are
  /// intersections, so the empty S yields the whole ground set.
  Bits up_down_set(Bits s, UpDownMode mode) const;

  /// Elements of a maximum chain.
  int height() const;

  /// Size of the longest chain through each element.
  std::vector<int> chain_through() const;

  /// Membership in P_l(k): height exactly k and every element on a chain
  /// of at least l elements.
  bool in_class(int l, int k) const;

  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of_label(const std::string& s) const;

  Graph comparability_graph() const;
  Poset dual() const;

 private:
  int n_ = 0;
  std::vector<Bits> up_, down_, cover_up_;
  Bits max_ = 0, min_ = 0, mid_ = 0;
  std::vector<std::string> labels_;

  void finish();  // derives covers and positional sets from the closure
};

/// Product order on X1 x X2; labels pair the factor labels.
Poset cartesian_product(const Poset& p1, const Poset& p2);

/// Bipartite graph viewed as the height-2 poset with Min = left side and
/// x < y iff xy is an edge.
Poset poset_of_bipartite(const BipartiteGraph& b);

/// Backtracking poset isomorphism with positional/degree pruning.
bool poset_isomorphic(const Poset& p1, const Poset& p2, int size_cap = 16);

/// Identical ground set and identical strict order (labels ignored).
inline bool posets_equal(const Poset& a, const Poset& b) {
  if (a.n() != b.n()) return false;
  for (int v = 0; v < a.n(); ++v)
    if (a.strict_up(v) != b.strict_up(v)) return false;
  return true;
}

}  // namespace osdom
