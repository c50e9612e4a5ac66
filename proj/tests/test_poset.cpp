#include <algorithm>

#include "doctest.h"
#include "osdom/poset.hpp"
#include "osdom/verify.hpp"

using namespace osdom;

namespace {

Poset chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::build(n, covers);
}

// independent height oracle: longest chain by full subset enumeration
int height_by_enumeration(const Poset& p) {
  int best = 0;
  for (Bits s = 0; s < (Bits{1} << p.n()); ++s) {
    auto verts = bits_to_vector(s);
    bool is_chain = true;
    for (std::size_t i = 0; i < verts.size() && is_chain; ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (!p.comparable(verts[i], verts[j])) { is_chain = false; break; }
    if (is_chain) best = std::max(best, static_cast<int>(verts.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("build computes the transitive closure") {
  Poset p = chain(3);
  CHECK(p.less(0, 2));  // forced by transitivity
  CHECK(p.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("shortcut pairs are accepted and reduced away") {
  Poset p = Poset::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("cycles and bad indices are fatal") {
  CHECK_THROWS_AS(Poset::build(2, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(Poset::build(2, {{0, 5}}), IndexError);
  CHECK_THROWS_AS(Poset::build(2, {{1, 1}}), CycleError);
}

TEST_CASE("figure 1 poset P has the drawn closure") {
  Poset p = twin_poset_p();
  CHECK(p.less(0, 3));
  CHECK(p.less(0, 4));
  CHECK(!p.comparable(1, 2));
  CHECK(!p.comparable(3, 4));
}

TEST_CASE("positional sets") {
  Poset p = chain(3);
  CHECK(p.max_set() == bit(2));
  CHECK(p.min_set() == bit(0));
  CHECK(p.mid_set() == bit(1));

  Poset anti = Poset::build(3, {});
  CHECK(anti.max_set() == full_mask(3));
  CHECK(anti.min_set() == full_mask(3));
  CHECK(anti.mid_set() == 0);

  Poset f1 = twin_poset_p();
  std::vector<int> mids = bits_to_vector(f1.mid_set());
  std::vector<std::string> labels;
  for (int m : mids) labels.push_back(f1.label(m));
  CHECK(labels == std::vector<std::string>{"2", "3"});
}

TEST_CASE("up and down sets") {
  Poset p = chain(3);
  CHECK(p.up_down_set(bit(1), UpDownMode::up) == bit(2));
  CHECK(p.up_down_set(bit(1), UpDownMode::down) == bit(0));

  Poset f8 = noncomplete_helly_poset();
  int m1 = f8.index_of_label("1"), m2 = f8.index_of_label("2");
  CHECK(f8.up_down_set(bit(m1) | bit(m2), UpDownMode::common_up) == bit(f8.index_of_label("a")));

  // vacuous universal quantification over the empty set
  CHECK(p.up_down_set(0, UpDownMode::common_up) == p.elements());
  CHECK(p.up_down_set(0, UpDownMode::up) == 0);
}

TEST_CASE("height against the subset-enumeration oracle") {
  CHECK(chain(4).height() == 4);
  CHECK(Poset::build(3, {}).height() == 1);
  Poset f3 = reduction_demo_poset();
  int oracle = height_by_enumeration(f3);
  CHECK(oracle == 4);  // longest chain, e.g. b < d < f < h
  CHECK(f3.height() == oracle);

  Rng rng(99);
  for (int t = 0; t < 30; ++t) {
    Poset p = random_poset(rng, 8);
    CHECK(p.height() == height_by_enumeration(p));
  }
}

TEST_CASE("class membership") {
  CHECK(chain(3).in_class(3, 3));
  CHECK(twin_poset_p().in_class(3, 3));
  CHECK(twin_poset_r().in_class(3, 3));
  // chain of 3 plus one isolated element: the isolated one sits on a 1-chain
  Poset p = Poset::build(4, {{0, 1}, {1, 2}});
  CHECK(!p.in_class(3, 3));
  CHECK_THROWS_AS(chain(3).in_class(0, 3), ParamError);
}

TEST_CASE("comparability graph") {
  Graph k3 = chain(3).comparability_graph();
  CHECK(k3.m() == 3);
  CHECK(Poset::build(3, {}).comparability_graph().m() == 0);
}

TEST_CASE("closure is a strict order on random posets") {
  Rng rng(4);
  for (int t = 0; t < 25; ++t) {
    Poset p = random_poset(rng, 9);
    for (int a = 0; a < p.n(); ++a) {
      CHECK(!p.less(a, a));
      for (int b = 0; b < p.n(); ++b) {
        if (p.less(a, b)) CHECK(!p.less(b, a));
        for (int c = 0; c < p.n(); ++c)
          if (p.less(a, b) && p.less(b, c)) CHECK(p.less(a, c));
      }
    }
    // positional sets agree with their closure-based definitions
    for (int v = 0; v < p.n(); ++v) {
      CHECK(has_bit(p.max_set(), v) == (p.strict_up(v) == 0));
      CHECK(has_bit(p.min_set(), v) == (p.strict_down(v) == 0));
    }
  }
}

TEST_CASE("dual reverses the order") {
  Poset p = chain(3);
  Poset d = p.dual();
  CHECK(d.less(2, 0));
  CHECK(posets_equal(p, d.dual()));
  CHECK(graphs_equal(p.comparability_graph(), d.comparability_graph()));
  CHECK(poset_isomorphic(selfdual_helly_poset(), selfdual_helly_poset().dual()));
}

TEST_CASE("cartesian products") {
  Poset grid = cartesian_product(chain(2), chain(2));
  CHECK(grid.n() == 4);
  CHECK(grid.height() == 3);
  CHECK(bit_count(grid.mid_set()) == 2);
  CHECK(bit_count(grid.min_set()) == 1);
  CHECK(bit_count(grid.max_set()) == 1);

  Poset p = twin_poset_p();
  Poset same = cartesian_product(p, chain(1));
  CHECK(posets_equal(p, same));

  Rng rng(12);
  for (int t = 0; t < 15; ++t) {
    Poset a = random_poset(rng, 5), b = random_poset(rng, 5);
    if (a.n() * b.n() > kMaxUniverse) continue;
    CHECK(cartesian_product(a, b).height() == a.height() + b.height() - 1);
  }
  CHECK_THROWS_AS(cartesian_product(chain(10), chain(10)), SizeCapError);
}

TEST_CASE("poset isomorphism distinguishes the comparability twins") {
  CHECK(!poset_isomorphic(twin_poset_p(), twin_poset_r()));
  CHECK(poset_isomorphic(twin_poset_p(), twin_poset_p()));
  CHECK_THROWS_AS(poset_isomorphic(chain(17), chain(17)), SizeCapError);
}

TEST_CASE("a bipartite graph as a poset, crossed with an edge") {
  // the path on four vertices, read as a height-2 poset
  Graph p4 = standard_graph(StandardKind::path, 4);
  BipartiteGraph bp{p4, *bipartition_of(p4)};
  Poset prod = cartesian_product(poset_of_bipartite(bp), chain(2));
  CHECK(prod.height() == 3);
  CHECK(prod.in_class(3, 3));
}
