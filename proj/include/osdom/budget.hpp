#pragma once

#include <cstdint>

#include "osdom/errors.hpp"

namespace osdom {

/// Node budget for the exponential solvers. Exhaustion raises
/// BudgetExceeded instead of degrading silently. The default limit can be
/// overridden with the OSDOM_BUDGET environment variable.
class Budget {
 public:
  Budget() : limit_(default_limit()) {}
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void tick(std::uint64_t cost = 1) {
    used_ += cost;
    if (used_ > limit_)
      throw BudgetExceeded("solver exceeded its node budget of " + std::to_string(limit_));
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

  static std::uint64_t default_limit();

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace osdom
