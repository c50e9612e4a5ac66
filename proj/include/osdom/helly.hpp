#pragma once

#include <optional>
#include <vector>

#include "osdom/poset.hpp"
#include "osdom/set_family.hpp"

namespace osdom {

/// Every pair of members meets; vacuously true below two members.
bool is_intersecting(const SetFamily& f);

struct HellyReport {
  bool holds = true;
  std::vector<int> witness;  // member indices of a minimal violating subfamily
};

/// Helly property: every pairwise-intersecting subfamily has a common
/// element. Violations are reported as a minimal witness (size-ascending
/// search stops at the first one). SizeCapError above `member_cap`.
HellyReport has_helly_property(const SetFamily& f, int member_cap = 20);

/// Up-family {U_P(x)} and down-family {D_P(x)} over the mid elements.
SetFamily up_family(const Poset& p);
SetFamily down_family(const Poset& p);

struct PosetHellyReport {
  bool holds = true;
  bool up_side = true;       // which family carries the witness
  std::vector<int> witness;  // mid elements of the violating subfamily
};

/// Both U_P and D_P have the Helly property. ClassError outside P_3(k).
PosetHellyReport is_helly_poset(const Poset& p, int member_cap = 20);

struct CompleteHellyReport {
  bool holds = true;
  std::vector<int> witness;  // mid subset whose two families disagree
};

/// U_P(S) intersecting iff D_P(S) intersecting for every mid subset S.
/// Intersecting is a pairwise notion, so the two-element subsets decide
/// the whole condition; the exponential subset sweep stays available as a
/// debug oracle. NotHellyError when P is not a Helly poset.
CompleteHellyReport is_complete_helly_poset(const Poset& p, int member_cap = 20);

/// Same predicate by full subset enumeration, the agreement oracle.
CompleteHellyReport complete_helly_by_enumeration(const Poset& p, int mid_cap = 16);

enum class C6Level { hu_hd, comp };

/// Sufficient conditions: H_u and H_d C6-free, or Comp(P) C6-free. A true
/// answer is asserted against is_helly_poset.
bool c6_sufficient_check(const Poset& p, C6Level level);

}  // namespace osdom
