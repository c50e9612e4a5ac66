#include "osdom/hitting.hpp"

#include <algorithm>
#include <cstdlib>

namespace osdom {

std::uint64_t Budget::default_limit() {
  if (const char* env = std::getenv("OSDOM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 400'000'000ULL;
}

namespace {

struct Searcher {
  std::vector<Bits> sets;  // minimal unhit sets, candidates already masked
  Budget* budget = nullptr;
  int best = -1;           // -1 while no solution found under the cap
  int cap = 0;             // only solutions with size < cap are recorded
  Bits best_witness = 0;

  // Greedy packing of pairwise candidate-disjoint unhit sets.
  int lower_bound(Bits chosen) const {
    Bits used = 0;
    int packed = 0;
    for (Bits s : sets) {
      if (s & chosen) continue;
      if (s & used) continue;
      used |= s;
      ++packed;
    }
    return packed;
  }

  void run(Bits chosen, int count) {
    budget->tick();
    int pick = -1;
    int pick_size = 65;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i] & chosen) continue;
      int size = bit_count(sets[i]);
      if (size < pick_size) {
        pick_size = size;
        pick = static_cast<int>(i);
        if (size <= 1) break;
      }
    }
    if (pick == -1) {
      if (best == -1 || count < best) {
        best = count;
        best_witness = chosen;
      }
      return;
    }
    int limit = (best == -1) ? cap : std::min(cap, best);
    if (pick_size == 0) return;  // infeasible branch
    if (count + lower_bound(chosen) >= limit) return;
    for_each_bit(sets[static_cast<std::size_t>(pick)],
                 [&](int v) { run(chosen | bit(v), count + 1); });
  }
};

// Supersets of other sets are redundant for hitting.
std::vector<Bits> minimal_sets(std::vector<Bits> sets) {
  std::sort(sets.begin(), sets.end(),
            [](Bits a, Bits b) { return bit_count(a) < bit_count(b); });
  std::vector<Bits> kept;
  for (Bits s : sets) {
    bool redundant = false;
    for (Bits k : kept)
      if ((k & ~s) == 0) { redundant = true; break; }
    if (!redundant) kept.push_back(s);
  }
  return kept;
}

}  // namespace

bool has_hitting_set(const HittingInstance& inst, int cap, Bits forced,
                     Bits excluded, Budget& budget) {
  if (cap < bit_count(forced)) return false;
  std::vector<Bits> open;
  for (Bits s : inst.sets) {
    if (s & forced) continue;
    Bits avail = s & ~excluded;
    if (avail == 0) return false;
    open.push_back(avail);
  }
  Searcher sr;
  sr.sets = minimal_sets(std::move(open));
  sr.budget = &budget;
  sr.cap = cap - bit_count(forced) + 1;  // record any solution of size <= cap
  sr.run(0, 0);
  return sr.best != -1;
}

HittingResult min_hitting_set(const HittingInstance& inst, Budget& budget) {
  for (Bits s : inst.sets)
    if (s == 0) throw ParamError("empty set can never be hit");
  Searcher sr;
  sr.sets = minimal_sets(inst.sets);
  sr.budget = &budget;
  sr.cap = inst.n + 1;
  sr.run(0, 0);
  int value = (sr.best == -1) ? 0 : sr.best;

  // Lexicographically least optimal witness: greedily commit the smallest
  // index that still extends to an optimal solution.
  Bits forced = 0, excluded = 0;
  for (int v = 0; v < inst.n && bit_count(forced) < value; ++v) {
    if (has_hitting_set(inst, value, forced | bit(v), excluded, budget))
      forced |= bit(v);
    else
      excluded |= bit(v);
  }
  return HittingResult{value, forced};
}

std::optional<Bits> min_hitting_set_by_enumeration(const HittingInstance& inst,
                                                   Budget& budget) {
  auto hits_all = [&](Bits d) {
    for (Bits s : inst.sets)
      if ((s & d) == 0) return false;
    return true;
  };
  std::vector<int> comb;
  // size-ascending, lexicographic combinations
  for (int k = 0; k <= inst.n; ++k) {
    comb.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
      budget.tick();
      Bits d = 0;
      for (int v : comb) d |= bit(v);
      if (hits_all(d)) return d;
      int i = k - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == inst.n - k + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace osdom
