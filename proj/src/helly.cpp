#include "osdom/helly.hpp"

#include <stdexcept>

#include "osdom/recognizers.hpp"
#include "osdom/transforms.hpp"

namespace osdom {

bool is_intersecting(const SetFamily& f) {
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j)
      if ((f.members[i] & f.members[j]) == 0) return false;
  return true;
}

namespace {

// Size-ascending DFS over pairwise-intersecting subfamilies; the first
// empty-intersection hit is minimal because smaller violators would have
// been met at an earlier level.
bool find_violation(const SetFamily& f, int size, std::vector<int>& chosen,
                    Bits inter, int from) {
  if (static_cast<int>(chosen.size()) == size) return inter == 0;
  for (int i = from; i < static_cast<int>(f.members.size()); ++i) {
    Bits m = f.members[static_cast<std::size_t>(i)];
    bool pairwise = true;
    for (int c : chosen)
      if ((f.members[static_cast<std::size_t>(c)] & m) == 0) pairwise = false;
    if (!pairwise) continue;
    chosen.push_back(i);
    if (find_violation(f, size, chosen, inter & m, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

HellyReport has_helly_property(const SetFamily& f, int member_cap) {
  f.validate();
  if (static_cast<int>(f.members.size()) > member_cap)
    throw SizeCapError("Helly check capped at " + std::to_string(member_cap) + " members");
  HellyReport report;
  int count = static_cast<int>(f.members.size());
  for (int size = 3; size <= count; ++size) {
    std::vector<int> chosen;
    if (find_violation(f, size, chosen, full_mask(f.ground), 0)) {
      report.holds = false;
      report.witness = chosen;
      return report;
    }
  }
  return report;
}

SetFamily up_family(const Poset& p) {
  SetFamily f;
  f.ground = p.n();
  for (int m : bits_to_vector(p.mid_set())) f.members.push_back(p.strict_up(m));
  return f;
}

SetFamily down_family(const Poset& p) {
  SetFamily f;
  f.ground = p.n();
  for (int m : bits_to_vector(p.mid_set())) f.members.push_back(p.strict_down(m));
  return f;
}

namespace {

void require_p3k(const Poset& p, const char* who) {
  int h = p.height();
  if (h < 3 || !p.in_class(3, h))
    throw ClassError(std::string(who) + " needs a poset in P_3(k), k >= 3");
}

}  // namespace

PosetHellyReport is_helly_poset(const Poset& p, int member_cap) {
  require_p3k(p, "is_helly_poset");
  std::vector<int> mids = bits_to_vector(p.mid_set());
  PosetHellyReport report;
  HellyReport up = has_helly_property(up_family(p), member_cap);
  if (!up.holds) {
    report.holds = false;
    report.up_side = true;
    for (int i : up.witness) report.witness.push_back(mids[static_cast<std::size_t>(i)]);
    return report;
  }
  HellyReport down = has_helly_property(down_family(p), member_cap);
  if (!down.holds) {
    report.holds = false;
    report.up_side = false;
    for (int i : down.witness) report.witness.push_back(mids[static_cast<std::size_t>(i)]);
  }
  return report;
}

CompleteHellyReport is_complete_helly_poset(const Poset& p, int member_cap) {
  require_p3k(p, "is_complete_helly_poset");
  if (!is_helly_poset(p, member_cap).holds)
    throw NotHellyError("complete Helly check applies to Helly posets");
  CompleteHellyReport report;
  std::vector<int> mids = bits_to_vector(p.mid_set());
  for (std::size_t i = 0; i < mids.size(); ++i)
    for (std::size_t j = i + 1; j < mids.size(); ++j) {
      bool up = (p.strict_up(mids[i]) & p.strict_up(mids[j])) != 0;
      bool down = (p.strict_down(mids[i]) & p.strict_down(mids[j])) != 0;
      if (up != down) {
        report.holds = false;
        report.witness = {mids[i], mids[j]};
        return report;
      }
    }
  return report;
}

CompleteHellyReport complete_helly_by_enumeration(const Poset& p, int mid_cap) {
  require_p3k(p, "complete_helly_by_enumeration");
  std::vector<int> mids = bits_to_vector(p.mid_set());
  if (static_cast<int>(mids.size()) > mid_cap)
    throw SizeCapError("subset enumeration capped at " + std::to_string(mid_cap) + " mids");
  CompleteHellyReport report;
  auto intersecting = [&](Bits subset, bool up) {
    std::vector<int> picked;
    for_each_bit(subset, [&](int i) { picked.push_back(mids[static_cast<std::size_t>(i)]); });
    for (std::size_t a = 0; a < picked.size(); ++a)
      for (std::size_t b = a + 1; b < picked.size(); ++b) {
        Bits x = up ? p.strict_up(picked[a]) : p.strict_down(picked[a]);
        Bits y = up ? p.strict_up(picked[b]) : p.strict_down(picked[b]);
        if ((x & y) == 0) return false;
      }
    return true;
  };
  for (Bits subset = 0; subset < (Bits{1} << mids.size()); ++subset) {
    if (intersecting(subset, true) != intersecting(subset, false)) {
      report.holds = false;
      for_each_bit(subset, [&](int i) { report.witness.push_back(mids[static_cast<std::size_t>(i)]); });
      return report;
    }
  }
  return report;
}

bool c6_sufficient_check(const Poset& p, C6Level level) {
  require_p3k(p, "c6_sufficient_check");
  bool free;
  if (level == C6Level::comp) {
    free = forbidden_subgraph_free(p.comparability_graph(), Pattern::c6).free;
  } else {
    auto [hu, hd] = hu_hd(p);
    free = forbidden_subgraph_free(hu.graph, Pattern::c6).free &&
           forbidden_subgraph_free(hd.graph, Pattern::c6).free;
  }
  if (free && !is_helly_poset(p).holds)
    throw std::logic_error("C6-free sufficient condition contradicted the Helly check");
  return free;
}

}  // namespace osdom
