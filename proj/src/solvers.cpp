#include "osdom/solvers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "osdom/transforms.hpp"

namespace osdom {

namespace {

Budget& resolve(Budget*& caller, Budget& local) { return caller ? *caller : local; }

bool lex_set_less(Bits a, Bits b) {
  // Order on sorted index sequences: {0,5} < {1}.
  while (a || b) {
    if (a == b) return false;
    if (!a) return true;
    if (!b) return false;
    int la = lowest_bit(a), lb = lowest_bit(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

std::vector<std::vector<int>> canonical_parts(std::vector<Bits> blocks) {
  std::vector<std::vector<int>> parts;
  parts.reserve(blocks.size());
  for (Bits b : blocks) parts.push_back(bits_to_vector(b));
  std::sort(parts.begin(), parts.end());
  return parts;
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal witness check failed: ") + what);
}

}  // namespace

bool is_dominating(const Graph& g, Bits d) {
  d &= g.vertices();
  for (int v = 0; v < g.n(); ++v)
    if ((g.closed_neighbors(v) & d) == 0) return false;
  return true;
}

bool is_total_dominating(const Graph& g, Bits d) {
  d &= g.vertices();
  for (int v = 0; v < g.n(); ++v)
    if ((g.neighbors(v) & d) == 0) return false;
  return true;
}

bool is_os_dominating(const Poset& p, Bits d) {
  d &= p.elements();
  for (int v = 0; v < p.n(); ++v) {
    Bits closed = p.strict_up(v) | p.strict_down(v) | bit(v);
    if ((closed & d) == 0) return false;
  }
  Bits pending = p.mid_set() & ~d;
  bool ok = true;
  for_each_bit(pending, [&](int m) {
    if ((p.strict_down(m) & d) == 0 || (p.strict_up(m) & d) == 0) ok = false;
  });
  return ok;
}

HittingInstance os_domination_instance(const Poset& p) {
  HittingInstance inst;
  inst.n = p.n();
  for (int v = 0; v < p.n(); ++v) {
    if (has_bit(p.mid_set(), v)) {
      // Membership-or-sandwich splits into two requirements; either one
      // subsumes plain domination of v.
      inst.sets.push_back(bit(v) | p.strict_down(v));
      inst.sets.push_back(bit(v) | p.strict_up(v));
    } else {
      inst.sets.push_back(bit(v) | p.strict_up(v) | p.strict_down(v));
    }
  }
  return inst;
}

namespace {

// Branch-and-bound answers are re-derived by flat enumeration on small
// instances; a disagreement is a solver bug and aborts the run.
constexpr int kSelfCheckThreshold = 8;

SolveResult solve_hitting(const HittingInstance& inst, Method method, Budget& budget) {
  SolveResult r;
  r.method = method;
  if (method == Method::branch_and_bound) {
    HittingResult h = min_hitting_set(inst, budget);
    r.value = h.value;
    r.vertex_set = bits_to_vector(h.witness);
    if (inst.n <= kSelfCheckThreshold) {
      auto twin = min_hitting_set_by_enumeration(inst, budget);
      check(twin && bit_count(*twin) == r.value, "hitting enumeration twin agrees");
    }
  } else {
    auto h = min_hitting_set_by_enumeration(inst, budget);
    if (!h) throw std::logic_error("hitting enumeration found no solution");
    r.value = bit_count(*h);
    r.vertex_set = bits_to_vector(*h);
  }
  return r;
}

}  // namespace

SolveResult domination(const Graph& g, DominationVariant variant, Method method,
                       Budget* budget) {
  Budget local;
  Budget& b = resolve(budget, local);
  HittingInstance inst;
  inst.n = g.n();
  for (int v = 0; v < g.n(); ++v) {
    if (variant == DominationVariant::total && g.neighbors(v) == 0)
      throw IsolatedVertexError("total domination needs no isolated vertices; vertex " +
                                g.label(v) + " is isolated");
    inst.sets.push_back(variant == DominationVariant::plain ? g.closed_neighbors(v)
                                                            : g.neighbors(v));
  }
  SolveResult r = solve_hitting(inst, method, b);
  Bits w = vector_to_bits(r.vertex_set);
  check(static_cast<int>(r.vertex_set.size()) == r.value, "domination size");
  check(variant == DominationVariant::plain ? is_dominating(g, w) : is_total_dominating(g, w),
        "domination feasibility");
  return r;
}

SolveResult os_domination(const Poset& p, OsMethod om, Method method, Budget* budget) {
  Budget local;
  Budget& b = resolve(budget, local);
  SolveResult r;
  if (om == OsMethod::direct) {
    r = solve_hitting(os_domination_instance(p), method, b);
  } else {
    int h = p.height();
    if (h < 3 || !p.in_class(3, h))
      throw ClassError("via_star needs a poset in P_3(k), k >= 3");
    Transformed star = star_extension(p);
    SolveResult inner = domination(star.poset.comparability_graph(),
                                   DominationVariant::plain, method, &b);
    r.value = inner.value;
    r.method = method;
    // The star route's optimum equals gamma_os(P); report an os-dominating
    // witness of that size from the direct formulation.
    HittingInstance inst = os_domination_instance(p);
    Bits forced = 0, excluded = 0;
    for (int v = 0; v < p.n() && bit_count(forced) < r.value; ++v) {
      if (has_hitting_set(inst, r.value, forced | bit(v), excluded, b))
        forced |= bit(v);
      else
        excluded |= bit(v);
    }
    r.vertex_set = bits_to_vector(forced);
  }
  Bits w = vector_to_bits(r.vertex_set);
  check(static_cast<int>(r.vertex_set.size()) == r.value, "os-domination size");
  check(is_os_dominating(p, w), "os-domination feasibility");
  return r;
}

namespace {

// Weight of choosing exactly v2 as the 2-labeled set: every vertex outside
// N[v2] must carry a 1.
int roman_weight(const Graph& g, Bits v2) {
  Bits covered = v2;
  for_each_bit(v2, [&](int v) { covered |= g.neighbors(v); });
  return 2 * bit_count(v2) + (g.n() - bit_count(covered));
}

std::pair<int, Bits> roman_flat(const Graph& g, Budget& b) {
  if (g.n() > 20) throw SizeCapError("roman enumeration capped at 20 vertices");
  if (g.n() == 0) return {0, 0};
  int best = 1 << 20;
  Bits best_v2 = 0;
  for (Bits mask = 0; mask < (Bits{1} << g.n()); ++mask) {
    b.tick();
    int w = roman_weight(g, mask);
    if (w < best || (w == best && lex_set_less(mask, best_v2))) {
      best = w;
      best_v2 = mask;
    }
  }
  return {best, best_v2};
}

struct RomanSearch {
  const Graph* g;
  Budget* budget;
  int best = 1 << 20;
  Bits best_v2 = 0;
  int target = -1;  // second pass: first solution matching target wins
  bool found = false;

  int settled_penalty(Bits v2, int next) const {
    // Vertices below `next` that are uncovered and have no neighbor at or
    // beyond the decision frontier already cost 1 each.
    Bits covered = v2;
    for_each_bit(v2, [&](int v) { covered |= g->neighbors(v); });
    int pay = 0;
    for (int u = 0; u < next; ++u)
      if (!has_bit(covered, u) && (g->neighbors(u) & ~full_mask(next)) == 0) ++pay;
    return pay;
  }

  void run(Bits v2, int v) {
    if (found) return;
    budget->tick();
    if (v == g->n()) {
      int w = roman_weight(*g, v2);
      if (target >= 0) {
        if (w == target) {
          best_v2 = v2;
          found = true;
        }
      } else if (w < best) {
        best = w;
        best_v2 = v2;
      }
      return;
    }
    int lb = 2 * bit_count(v2) + settled_penalty(v2, v);
    if (target >= 0 ? lb > target : lb >= best) return;
    run(v2 | bit(v), v + 1);
    run(v2, v + 1);
  }
};

}  // namespace

SolveResult roman_domination(const Graph& g, RomanMethod rm, Method method, Budget* budget) {
  Budget local;
  Budget& b = resolve(budget, local);
  SolveResult r;
  r.method = method;
  Bits v2 = 0;
  if (rm == RomanMethod::direct) {
    if (method == Method::branch_and_bound) {
      RomanSearch s;
      s.g = &g;
      s.budget = &b;
      s.run(0, 0);
      int value = g.n() == 0 ? 0 : s.best;
      // Second pass: lexicographically least optimal 2-set (include-first
      // order meets the first optimum at the lex-least set).
      RomanSearch s2 = s;
      s2.target = value;
      s2.best_v2 = 0;
      s2.found = g.n() == 0;
      s2.run(0, 0);
      r.value = value;
      v2 = s2.best_v2;
      if (g.n() <= kSelfCheckThreshold)
        check(roman_flat(g, b).first == r.value, "roman enumeration twin agrees");
    } else {
      auto [best, best_v2] = roman_flat(g, b);
      r.value = best;
      v2 = best_v2;
    }
    Bits covered = v2;
    for_each_bit(v2, [&](int v) { covered |= g.neighbors(v); });
    r.levels.assign(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
      r.levels[static_cast<std::size_t>(v)] = has_bit(v2, v) ? 2 : (has_bit(covered, v) ? 0 : 1);
  } else {
    // min{|S| + 2 gamma(G-S)} over 2-packings S.
    int best = 1 << 20;
    Bits best_s = 0;
    for (Bits s : two_packings(g, false)) {
      b.tick();
      Graph rest = g.induced(g.vertices() & ~s);
      int val = bit_count(s) + 2 * domination(rest, DominationVariant::plain,
                                              Method::branch_and_bound, &b).value;
      if (val < best || (val == best && lex_set_less(s, best_s))) {
        best = val;
        best_s = s;
      }
    }
    r.value = g.n() == 0 ? 0 : best;
    r.vertex_set = bits_to_vector(best_s);
    if (g.n() > 0) {
      Graph rest = g.induced(g.vertices() & ~best_s);
      check(bit_count(best_s) + 2 * domination(rest, DominationVariant::plain,
                                               Method::branch_and_bound, &b).value == r.value,
            "two-packing witness value");
      auto d = g.distances();
      auto verts = bits_to_vector(best_s);
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
          check(d[static_cast<std::size_t>(verts[i])][static_cast<std::size_t>(verts[j])] > 2 ||
                    d[static_cast<std::size_t>(verts[i])][static_cast<std::size_t>(verts[j])] == -1,
                "witness is a 2-packing");
    }
    return r;
  }
  // Witness check: valid Roman function of the reported weight.
  int weight = 0;
  for (int v = 0; v < g.n(); ++v) {
    int f = r.levels[static_cast<std::size_t>(v)];
    weight += f;
    if (f == 0) {
      bool has2 = false;
      for_each_bit(g.neighbors(v), [&](int u) {
        if (r.levels[static_cast<std::size_t>(u)] == 2) has2 = true;
      });
      check(has2, "roman zero vertex without a 2-neighbor");
    }
  }
  check(weight == r.value, "roman weight");
  return r;
}

SolveResult theta(const Graph& g, Budget* budget) {
  Budget local;
  Budget& b = resolve(budget, local);
  SolveResult r;
  r.method = Method::enumeration;
  int best = 1 << 20;
  Bits best_a = 0;
  for (Bits a = 0;; ++a) {
    b.tick();
    Graph rest = g.induced(g.vertices() & ~a);
    int val = bit_count(a) +
              2 * domination(rest, DominationVariant::plain, Method::branch_and_bound, &b).value;
    if (val < best || (val == best && lex_set_less(a, best_a))) {
      best = val;
      best_a = a;
    }
    if (a == g.vertices()) break;
  }
  r.value = g.n() == 0 ? 0 : best;
  r.vertex_set = bits_to_vector(best_a);
  return r;
}

namespace {

// Restricted-growth-string walk over all set partitions of {0..n-1}.
template <typename F>
void for_each_set_partition(int n, Budget& budget, F&& accept) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  while (true) {
    budget.tick();
    int blocks = 0;
    for (int v : rgs) blocks = std::max(blocks, v + 1);
    std::vector<Bits> part(static_cast<std::size_t>(blocks), 0);
    for (int i = 0; i < n; ++i) part[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] |= bit(i);
    accept(part);
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[static_cast<std::size_t>(j)] + 1);
      if (rgs[static_cast<std::size_t>(i)] < cap) break;
      --i;
    }
    if (i <= 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
  }
}

bool is_clique(const Graph& g, Bits s) {
  bool ok = true;
  for_each_bit(s, [&](int v) {
    if ((s & ~g.closed_neighbors(v)) != 0) ok = false;
  });
  return ok;
}

bool is_biclique_block(const BipartiteGraph& b, Bits s) {
  Bits l = s & b.left;
  Bits r = s & ~b.left;
  if (bit_count(s) == 1) return true;  // degenerate single-vertex block
  if (l == 0 || r == 0) return false;
  bool ok = true;
  for_each_bit(l, [&](int v) {
    if ((r & ~b.graph.neighbors(v)) != 0) ok = false;
  });
  return ok;
}

// All cliques that contain `v` inside `mask`, ascending-index expansion.
void cliques_with(const Graph& g, int v, Bits mask, Bits cur, Bits cand,
                  std::vector<Bits>& out) {
  out.push_back(cur);
  for_each_bit(cand, [&](int u) {
    cliques_with(g, v, mask, cur | bit(u),
                 cand & g.neighbors(u) & ~full_mask(u + 1), out);
  });
}

struct WeSearch {
  const Graph* g;
  Budget* budget;
  std::map<Bits, std::pair<int, Bits>> memo;  // uncovered -> (we, first clique)

  int solve(Bits mask) {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second.first;
    budget->tick();
    int v = lowest_bit(mask);
    std::vector<Bits> options;
    cliques_with(*g, v, mask, bit(v), g->neighbors(v) & mask & ~full_mask(v + 1), options);
    int best = 1 << 20;
    Bits best_clique = bit(v);
    for (Bits c : options) {
      int w = (bit_count(c) == 1 ? 1 : 2) + solve(mask & ~c);
      if (w < best) {
        best = w;
        best_clique = c;
      }
    }
    memo[mask] = {best, best_clique};
    return best;
  }

  std::vector<Bits> reconstruct(Bits mask) {
    std::vector<Bits> blocks;
    while (mask) {
      solve(mask);
      Bits c = memo[mask].second;
      blocks.push_back(c);
      mask &= ~c;
    }
    return blocks;
  }
};

}  // namespace

SolveResult weighted_clique_partition(const Graph& g, Method method, Budget* budget) {
  Budget local;
  Budget& b = resolve(budget, local);
  SolveResult r;
  r.method = method;
  std::vector<Bits> blocks;
  auto flat = [&]() {
    if (g.n() > 12) throw SizeCapError("we enumeration capped at 12 vertices");
    std::pair<int, std::vector<Bits>> out{g.n() == 0 ? 0 : (1 << 20), {}};
    for_each_set_partition(g.n(), b, [&](const std::vector<Bits>& part) {
      int w = 0;
      for (Bits block : part) {
        if (!is_clique(g, block)) return;
        w += bit_count(block) == 1 ? 1 : 2;
      }
      if (w < out.first) out = {w, part};
    });
    if (g.n() == 0) out.second.clear();
    return out;
  };
  if (method == Method::branch_and_bound) {
    WeSearch s{&g, &b, {}};
    r.value = s.solve(g.vertices());
    blocks = s.reconstruct(g.vertices());
    if (g.n() <= kSelfCheckThreshold)
      check(flat().first == r.value, "we enumeration twin agrees");
  } else {
    auto [best, best_blocks] = flat();
    r.value = best;
    blocks = best_blocks;
  }
  int w = 0;
  Bits seen = 0;
  for (Bits c : blocks) {
    check(is_clique(g, c), "we block is a clique");
    check((seen & c) == 0, "we blocks disjoint");
    seen |= c;
    w += bit_count(c) == 1 ? 1 : 2;
  }
  check(seen == g.vertices(), "we blocks cover");
  check(w == r.value, "we weight");
  r.parts = canonical_parts(blocks);
  return r;
}

namespace {

struct VdtSearch {
  const std::vector<std::array<int, 3>>* tris;
  std::vector<Bits> tri_masks;
  Budget* budget;
  std::map<Bits, std::pair<int, int>> memo;  // mask -> (count, triangle index or -1)

  int solve(Bits mask) {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second.first;
    budget->tick();
    int v = lowest_bit(mask);
    int best = 0, pick = -1;
    // skip v entirely
    int skip = solve(mask & ~bit(v));
    best = skip;
    for (std::size_t t = 0; t < tri_masks.size(); ++t) {
      Bits tm = tri_masks[t];
      if (!has_bit(tm, v)) continue;
      if ((tm & ~mask) != 0) continue;
      int val = 1 + solve(mask & ~tm);
      if (val > best) {
        best = val;
        pick = static_cast<int>(t);
      }
    }
    memo[mask] = {best, pick};
    return best;
  }
};

}  // namespace

SolveResult vertex_disjoint_triangles(const Graph& g, Method method, Budget* budget) {
  Budget local;
  Budget& b = resolve(budget, local);
  SolveResult r;
  r.method = method;
  auto tris = g.triangles();
  std::vector<Bits> masks;
  masks.reserve(tris.size());
  for (auto& t : tris) masks.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
  std::vector<Bits> packing;
  auto flat = [&]() {
    int best = 0;
    std::vector<Bits> cur, best_pack;
    auto rec = [&](auto&& self, std::size_t from, Bits used) -> void {
      b.tick();
      if (static_cast<int>(cur.size()) > best) {
        best = static_cast<int>(cur.size());
        best_pack = cur;
      }
      for (std::size_t t = from; t < masks.size(); ++t) {
        if (masks[t] & used) continue;
        cur.push_back(masks[t]);
        self(self, t + 1, used | masks[t]);
        cur.pop_back();
      }
    };
    rec(rec, 0, 0);
    return std::pair<int, std::vector<Bits>>{best, best_pack};
  };
  if (method == Method::branch_and_bound) {
    VdtSearch s;
    s.tris = &tris;
    s.tri_masks = masks;
    s.budget = &b;
    r.value = s.solve(g.vertices());
    if (g.n() <= kSelfCheckThreshold)
      check(flat().first == r.value, "vdt enumeration twin agrees");
    Bits mask = g.vertices();
    while (mask) {
      s.solve(mask);
      auto [cnt, pick] = s.memo[mask];
      if (cnt == 0) break;
      if (pick == -1) {
        mask &= ~bit(lowest_bit(mask));
        continue;
      }
      packing.push_back(masks[static_cast<std::size_t>(pick)]);
      mask &= ~masks[static_cast<std::size_t>(pick)];
    }
  } else {
    auto [best, best_pack] = flat();
    r.value = best;
    packing = best_pack;
  }
  Bits seen = 0;
  for (Bits t : packing) {
    check(bit_count(t) == 3 && is_clique(g, t), "vdt block is a triangle");
    check((seen & t) == 0, "vdt blocks disjoint");
    seen |= t;
  }
  check(static_cast<int>(packing.size()) == r.value, "vdt count");
  r.parts = canonical_parts(packing);
  return r;
}

namespace {

bool color_feasible(const Graph& g, int k, std::vector<int>& colors, int v, int used,
                    Budget& budget) {
  budget.tick();
  if (v == g.n()) return true;
  int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for_each_bit(g.neighbors(v) & full_mask(v), [&](int u) {
      if (colors[static_cast<std::size_t>(u)] == c) ok = false;
    });
    if (!ok) continue;
    colors[static_cast<std::size_t>(v)] = c;
    if (color_feasible(g, k, colors, v + 1, std::max(used, c + 1), budget)) return true;
  }
  colors[static_cast<std::size_t>(v)] = -1;
  return false;
}

}  // namespace

SolveResult chromatic_number(const Graph& g, Method method, Budget* budget, int size_cap) {
  Budget local;
  Budget& b = resolve(budget, local);
  if (g.n() > size_cap)
    throw SizeCapError("chromatic number capped at " + std::to_string(size_cap) + " vertices");
  SolveResult r;
  r.method = method;
  if (g.n() == 0) {
    r.value = 0;
    return r;
  }
  auto flat = [&]() {
    if (g.n() > 8) throw SizeCapError("chromatic enumeration capped at 8 vertices");
    for (int k = 1;; ++k) {
      std::vector<int> assign(static_cast<std::size_t>(g.n()), 0);
      while (true) {
        b.tick();
        bool proper = true;
        for (auto [u, v] : g.edges())
          if (assign[static_cast<std::size_t>(u)] == assign[static_cast<std::size_t>(v)]) proper = false;
        if (proper) return std::pair<int, std::vector<int>>{k, assign};
        int i = g.n() - 1;
        while (i >= 0 && assign[static_cast<std::size_t>(i)] == k - 1) {
          assign[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++assign[static_cast<std::size_t>(i)];
      }
    }
  };
  if (method == Method::branch_and_bound) {
    int lower = bit_count(g.greedy_clique());
    for (int k = std::max(1, lower);; ++k) {
      std::vector<int> colors(static_cast<std::size_t>(g.n()), -1);
      if (color_feasible(g, k, colors, 0, 0, b)) {
        r.value = k;
        r.levels = colors;
        break;
      }
    }
    if (g.n() <= kSelfCheckThreshold)
      check(flat().first == r.value, "chromatic enumeration twin agrees");
  } else {
    auto [k, assign] = flat();
    r.value = k;
    r.levels = assign;
  }
  for (auto [u, v] : g.edges())
    check(r.levels[static_cast<std::size_t>(u)] != r.levels[static_cast<std::size_t>(v)],
          "coloring proper");
  int used = 0;
  for (int c : r.levels) used = std::max(used, c + 1);
  check(used <= r.value, "color count");
  return r;
}

namespace {

// Maximal bicliques as Galois-closed pairs, enumerated over subsets of the
// smaller side. Both sides nonempty; singleton bicliques are added for
// isolated vertices so covers stay total.
std::vector<Bits> maximal_bicliques(const BipartiteGraph& b) {
  Bits left = b.left & b.graph.vertices();
  Bits right = b.right();
  Bits small = bit_count(left) <= bit_count(right) ? left : right;
  Bits other = small == left ? right : left;
  std::vector<int> side = bits_to_vector(small);
  if (side.size() > 20) throw SizeCapError("biclique enumeration capped at side size 20");
  std::vector<Bits> out;
  for (Bits pick = 1; pick < (Bits{1} << side.size()); ++pick) {
    Bits t = 0;
    for (std::size_t i = 0; i < side.size(); ++i)
      if (has_bit(pick, static_cast<int>(i))) t |= bit(side[i]);
    Bits s = other;
    for_each_bit(t, [&](int v) { s &= b.graph.neighbors(v); });
    if (s == 0) continue;
    Bits t_closed = small;
    for_each_bit(s, [&](int v) { t_closed &= b.graph.neighbors(v); });
    out.push_back(s | t_closed);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for_each_bit(b.graph.isolated_vertices(), [&](int v) { out.push_back(bit(v)); });
  return out;
}

struct CoverSearch {
  std::vector<Bits> candidates;
  Bits universe;
  Budget* budget;
  std::map<Bits, std::pair<int, int>> memo;  // uncovered -> (count, candidate)

  int solve(Bits uncovered) {
    if (uncovered == 0) return 0;
    auto it = memo.find(uncovered);
    if (it != memo.end()) return it->second.first;
    budget->tick();
    int v = lowest_bit(uncovered);
    int best = 1 << 20, pick = -1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!has_bit(candidates[i], v)) continue;
      int val = 1 + solve(uncovered & ~candidates[i]);
      if (val < best) {
        best = val;
        pick = static_cast<int>(i);
      }
    }
    memo[uncovered] = {best, pick};
    return best;
  }

  std::vector<Bits> reconstruct() {
    std::vector<Bits> picked;
    Bits uncovered = universe;
    while (uncovered) {
      solve(uncovered);
      int pick = memo[uncovered].second;
      if (pick < 0) throw std::logic_error("cover reconstruction failed");
      picked.push_back(candidates[static_cast<std::size_t>(pick)]);
      uncovered &= ~candidates[static_cast<std::size_t>(pick)];
    }
    return picked;
  }
};

}  // namespace

SolveResult biclique_partition(const BipartiteGraph& b, BpMode mode, const Poset* origin,
                               Method method, Budget* budget) {
  b.validate();
  Budget local;
  Budget& bud = resolve(budget, local);
  SolveResult r;
  r.method = method;

  std::vector<Bits> candidates;
  if (mode == BpMode::general) {
    candidates = maximal_bicliques(b);
  } else {
    if (origin == nullptr)
      throw ShapeError("star_double_star mode needs the generating poset");
    const Poset& p = *origin;
    int h = p.height();
    if (h < 3 || !p.in_class(3, h))
      throw ShapeError("generating poset must lie in P_3(k)");
    TransformedBipartite bt = bipartite_transformation(p);
    if (bt.bipartite.graph.n() != b.graph.n() || bt.bipartite.left != b.left ||
        bt.bipartite.graph.edges() != b.graph.edges())
      throw ShapeError("graph is not the bipartite transformation of the supplied poset");
    // B_x: star at x' or x'' for extremal x, the double star for mids.
    const auto& prime = bt.prime;
    const auto& dprime = bt.dprime;
    for (int x = 0; x < p.n(); ++x) {
      Bits mask = 0;
      if (has_bit(p.mid_set(), x)) {
        for_each_bit(p.strict_down(x) | bit(x), [&](int y) {
          if (prime[static_cast<std::size_t>(y)] >= 0) mask |= bit(prime[static_cast<std::size_t>(y)]);
        });
        for_each_bit(p.strict_up(x) | bit(x), [&](int y) {
          if (dprime[static_cast<std::size_t>(y)] >= 0) mask |= bit(dprime[static_cast<std::size_t>(y)]);
        });
      } else if (has_bit(p.min_set(), x) && prime[static_cast<std::size_t>(x)] >= 0) {
        int v = prime[static_cast<std::size_t>(x)];
        mask = bit(v) | b.graph.neighbors(v);
      }
      if (has_bit(p.max_set(), x) && dprime[static_cast<std::size_t>(x)] >= 0) {
        int v = dprime[static_cast<std::size_t>(x)];
        mask |= bit(v) | b.graph.neighbors(v);
      }
      if (mask) candidates.push_back(mask);
    }
  }

  std::vector<Bits> blocks;
  auto flat = [&]() {
    if (b.graph.n() > 10) throw SizeCapError("bp enumeration capped at 10 vertices");
    std::pair<int, std::vector<Bits>> out{b.graph.n() == 0 ? 0 : (1 << 20), {}};
    for_each_set_partition(b.graph.n(), bud, [&](const std::vector<Bits>& part) {
      for (Bits block : part)
        if (!is_biclique_block(b, block)) return;
      if (static_cast<int>(part.size()) < out.first)
        out = {static_cast<int>(part.size()), part};
    });
    if (b.graph.n() == 0) out.second.clear();
    return out;
  };
  if (method == Method::branch_and_bound) {
    CoverSearch s;
    s.candidates = candidates;
    s.universe = b.graph.vertices();
    s.budget = &bud;
    int val = s.solve(b.graph.vertices());
    if (val >= (1 << 20)) throw ShapeError("candidate bicliques cannot cover the graph");
    r.value = val;
    blocks = s.reconstruct();
    if (mode == BpMode::general && b.graph.n() <= kSelfCheckThreshold)
      check(flat().first == r.value, "bp enumeration twin agrees");
  } else {
    auto [best, best_part] = flat();
    r.value = best;
    blocks = best_part;
  }
  Bits covered = 0;
  for (Bits block : blocks) {
    Bits l = block & b.left, rr = block & ~b.left;
    bool ok = bit_count(block) == 1;
    if (!ok && l != 0 && rr != 0) {
      ok = true;
      for_each_bit(l, [&](int v) {
        if ((rr & ~b.graph.neighbors(v)) != 0) ok = false;
      });
    }
    check(ok, "bp block is a biclique");
    covered |= block;
  }
  check(covered == b.graph.vertices(), "bp blocks cover");
  check(static_cast<int>(blocks.size()) == r.value, "bp count");
  r.parts = canonical_parts(blocks);
  return r;
}

}  // namespace osdom
