#pragma once

#include <optional>
#include <vector>

#include "osdom/bits.hpp"
#include "osdom/budget.hpp"

namespace osdom {

/// Minimum hitting set over a <=64 element universe. Domination-style
/// parameters all reduce to it: gamma hits closed neighborhoods, gamma_t
/// open ones, gamma_os additionally hits {m} u down(m) and {m} u up(m)
/// per mid element m.
struct HittingInstance {
  int n = 0;
  std::vector<Bits> sets;
};

struct HittingResult {
  int value = 0;
  Bits witness = 0;
};

/// Exact minimum, branch and bound (branch over the elements of an unhit
/// set with fewest candidates; disjoint-set packing lower bound). The
/// returned witness is the lexicographically least optimal set.
HittingResult min_hitting_set(const HittingInstance& inst, Budget& budget);

/// Decision variant: is there a hitting set of size <= cap that contains
/// `forced` and avoids `excluded`? Used for witness canonicalization and
/// threshold queries.
bool has_hitting_set(const HittingInstance& inst, int cap, Bits forced,
                     Bits excluded, Budget& budget);

/// Smallest feasible subsets by flat enumeration in size-then-lex order;
/// the independent oracle for the branch-and-bound path.
std::optional<Bits> min_hitting_set_by_enumeration(const HittingInstance& inst,
                                                   Budget& budget);

}  // namespace osdom
