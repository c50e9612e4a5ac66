#pragma once

#include <string>
#include <vector>

#include "osdom/bits.hpp"
#include "osdom/errors.hpp"

namespace osdom {

/// Indexed family of subsets of a ground set {0..ground-1}. Duplicate
/// members are kept as distinct entries.
struct SetFamily {
  int ground = 0;
  std::vector<Bits> members;

  void validate() const {
    if (ground < 0 || ground > kMaxUniverse)
      throw SizeCapError("ground set size out of range");
    for (Bits m : members)
      if ((m & ~full_mask(ground)) != 0)
        throw IndexError("family member leaves the ground set");
  }
};

}  // namespace osdom
