#include "doctest.h"
#include "osdom/helly.hpp"
#include "osdom/solvers.hpp"
#include "osdom/transforms.hpp"
#include "osdom/verify.hpp"

using namespace osdom;

namespace {

SetFamily family(int ground, std::vector<Bits> members) {
  return SetFamily{ground, std::move(members)};
}

}  // namespace

TEST_CASE("intersecting families") {
  CHECK(is_intersecting(family(3, {bit(0) | bit(1), bit(1) | bit(2), bit(0) | bit(2)})));
  CHECK(!is_intersecting(family(2, {bit(0), bit(1)})));
  CHECK(is_intersecting(family(2, {bit(0)})));
  CHECK(is_intersecting(family(2, {})));
}

TEST_CASE("helly property") {
  CHECK(has_helly_property(family(3, {bit(0), bit(1)})).holds);  // vacuous below 3 members
  // nested sets
  CHECK(has_helly_property(family(4, {bit(0), bit(0) | bit(1), full_mask(3)})).holds);
  // pairwise intersecting triple with empty center
  HellyReport r = has_helly_property(
      family(3, {bit(0) | bit(1), bit(1) | bit(2), bit(0) | bit(2)}));
  CHECK(!r.holds);
  CHECK(r.witness.size() == 3);
  CHECK_THROWS_AS(has_helly_property(family(3, std::vector<Bits>(25, bit(0)))), SizeCapError);
}

TEST_CASE("up family of P3(C4) is the textbook violation") {
  Poset p = graded_poset(standard_graph(StandardKind::cycle, 4), 3).poset;
  SetFamily up = up_family(p);
  CHECK(is_intersecting(up));  // all pairs share a layer-3 element
  HellyReport r = has_helly_property(up);
  CHECK(!r.holds);
  CHECK(r.witness.size() == 4);  // minimal witness is the whole family
  CHECK(!is_helly_poset(p).holds);
}

TEST_CASE("helly restriction monotonicity") {
  Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    int ground = rng.uniform(3, 6);
    int count = rng.uniform(3, 6);
    std::vector<Bits> members;
    for (int i = 0; i < count; ++i) {
      Bits m = 0;
      for (int x = 0; x < ground; ++x)
        if (rng.chance(1, 2)) m |= bit(x);
      if (m == 0) m = bit(rng.uniform(0, ground - 1));
      members.push_back(m);
    }
    SetFamily f = family(ground, members);
    if (has_helly_property(f).holds) {
      SetFamily g = f;
      g.members.pop_back();
      CHECK(has_helly_property(g).holds);
    }
  }
}

TEST_CASE("figure posets") {
  CHECK(is_helly_poset(selfdual_helly_poset()).holds);
  CHECK(!is_complete_helly_poset(selfdual_helly_poset()).holds);
  CHECK(is_helly_poset(noncomplete_helly_poset()).holds);
  CHECK(!is_complete_helly_poset(noncomplete_helly_poset()).holds);
}

TEST_CASE("complete check refuses non-helly input") {
  Poset p3c4 = graded_poset(standard_graph(StandardKind::cycle, 4), 3).poset;
  CHECK_THROWS_AS(is_complete_helly_poset(p3c4), NotHellyError);
  CHECK_THROWS_AS(is_helly_poset(Poset::build(3, {})), ClassError);
}

TEST_CASE("trees give complete helly posets") {
  Rng rng(62);
  for (int t = 0; t < 15; ++t) {
    Poset p = graded_poset(random_tree(rng, 6), 3).poset;
    CHECK(is_helly_poset(p).holds);
    CHECK(is_complete_helly_poset(p).holds);
  }
}

TEST_CASE("pair reduction agrees with subset enumeration") {
  Rng rng(63);
  for (int t = 0; t < 30; ++t) {
    Poset p = random_poset_in_class(rng, 3, 3, 10);
    if (!is_helly_poset(p).holds) continue;
    CHECK(is_complete_helly_poset(p).holds == complete_helly_by_enumeration(p).holds);
  }
}

TEST_CASE("family poset reflects the helly property both ways") {
  Rng rng(64);
  for (int t = 0; t < 30; ++t) {
    int ground = rng.uniform(2, 5);
    int count = rng.uniform(2, 5);
    std::vector<Bits> members;
    Bits covered = 0;
    for (int i = 0; i < count; ++i) {
      Bits m = 0;
      for (int x = 0; x < ground; ++x)
        if (rng.chance(1, 2)) m |= bit(x);
      if (m == 0) m = bit(rng.uniform(0, ground - 1));
      covered |= m;
      members.push_back(m);
    }
    if (covered != full_mask(ground)) continue;
    SetFamily f = family(ground, members);
    Poset p = family_poset(f).poset;
    CHECK(has_helly_property(f).holds == is_helly_poset(p).holds);
  }
}

TEST_CASE("c6 sufficient condition") {
  CHECK(c6_sufficient_check(graded_poset(standard_graph(StandardKind::path, 3), 3).poset,
                            C6Level::comp));
  Poset p3c6 = graded_poset(standard_graph(StandardKind::cycle, 6), 3).poset;
  CHECK(!c6_sufficient_check(p3c6, C6Level::comp));

  // P3(C4) fails Helly, so one of H_u, H_d must carry an induced C6
  Poset p3c4 = graded_poset(standard_graph(StandardKind::cycle, 4), 3).poset;
  CHECK(!c6_sufficient_check(p3c4, C6Level::hu_hd));

  Rng rng(65);
  for (int t = 0; t < 40; ++t) {
    Poset p = random_poset_in_class(rng, 3, 3, 9);
    if (c6_sufficient_check(p, C6Level::hu_hd)) CHECK(is_helly_poset(p).holds);
    if (c6_sufficient_check(p, C6Level::comp)) CHECK(is_helly_poset(p).holds);
  }
}

TEST_CASE("helly posets respect the chromatic bound") {
  Rng rng(66);
  for (int t = 0; t < 25; ++t) {
    Poset p = random_poset_in_class(rng, 3, 3, 9);
    if (!is_helly_poset(p).holds) continue;
    Graph md = middle_graph(p).graph;
    int chi = chromatic_number(md.complement()).value;
    CHECK(os_domination(p).value <= 2 * chi);
  }
}
