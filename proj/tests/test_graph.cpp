#include <algorithm>

#include "doctest.h"
#include "osdom/graph.hpp"
#include "osdom/verify.hpp"

using namespace osdom;

TEST_CASE("standard graphs") {
  Graph p4 = standard_graph(StandardKind::path, 4);
  CHECK(p4.n() == 4);
  CHECK(p4.m() == 3);
  CHECK(standard_graph(StandardKind::cycle, 3).m() == 3);
  CHECK(standard_graph(StandardKind::complete_bipartite, 2, 3).m() == 6);
  CHECK_THROWS_AS(standard_graph(StandardKind::cycle, 2), ParamError);
}

TEST_CASE("basic guards") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), ParamError);
  CHECK_THROWS_AS(g.add_edge(0, 7), IndexError);
  CHECK_THROWS_AS(Graph(70), SizeCapError);
}

TEST_CASE("square") {
  Graph p4 = standard_graph(StandardKind::path, 4);
  Graph sq = square(p4);
  CHECK(!sq.has_edge(0, 3));  // the only pair at distance 3
  CHECK(sq.m() == 5);
  Graph c4sq = square(standard_graph(StandardKind::cycle, 4));
  CHECK(c4sq.m() == 6);  // K4
  Graph k5 = standard_graph(StandardKind::complete, 5);
  CHECK(graphs_equal(square(k5), k5));

  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_connected_graph(rng, 8);
    Graph sq2 = square(g);
    for (auto [u, v] : g.edges()) CHECK(sq2.has_edge(u, v));  // monotone
    auto d = g.distances();
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        CHECK(sq2.has_edge(u, v) == (d[u][v] >= 1 && d[u][v] <= 2));
    // square of the square reaches distance four
    Graph sq4 = square(sq2);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        CHECK(sq4.has_edge(u, v) == (d[u][v] >= 1 && d[u][v] <= 4));
  }
}

TEST_CASE("two packings") {
  Graph k3 = standard_graph(StandardKind::complete, 3);
  auto all = two_packings(k3, false);
  CHECK(all.size() == 4);  // empty set and three singletons
  auto maximal = two_packings(k3, true);
  CHECK(maximal.size() == 3);

  Graph p4 = standard_graph(StandardKind::path, 4);
  auto packs = two_packings(p4, false);
  CHECK(std::find(packs.begin(), packs.end(), bit(0) | bit(3)) != packs.end());

  Graph c5 = standard_graph(StandardKind::cycle, 5);
  int best = 0;
  for (Bits s : two_packings(c5, false)) best = std::max(best, bit_count(s));
  CHECK(best == 1);  // diameter two

  // 2-packings are exactly the independent sets of the square
  Rng rng(8);
  for (int t = 0; t < 15; ++t) {
    Graph g = random_connected_graph(rng, 7);
    Graph sq = square(g);
    auto d = g.distances();
    for (Bits s : two_packings(g, false)) {
      auto verts = bits_to_vector(s);
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
          CHECK(d[verts[i]][verts[j]] > 2);
          CHECK(!sq.has_edge(verts[i], verts[j]));
        }
    }
  }
}

TEST_CASE("extended double cover") {
  BipartiteGraph c4 = extended_double_cover(standard_graph(StandardKind::complete, 2));
  CHECK(c4.graph.n() == 4);
  CHECK(c4.graph.m() == 4);
  CHECK(c4.graph.is_connected());
  c4.validate();

  BipartiteGraph single = extended_double_cover(Graph(1));
  CHECK(single.graph.n() == 2);
  CHECK(single.graph.m() == 1);

  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_connected_graph(rng, 9, 1);
    BipartiteGraph be = extended_double_cover(g);
    CHECK(be.graph.m() == g.n() + 2 * g.m());
    be.validate();
    CHECK(bipartition_of(be.graph).has_value());
    if (g.n() >= 2 && g.is_connected()) CHECK(be.graph.is_connected());
  }
}

TEST_CASE("bipartition detection") {
  CHECK(bipartition_of(standard_graph(StandardKind::path, 5)).has_value());
  CHECK(!bipartition_of(standard_graph(StandardKind::cycle, 5)).has_value());
  BipartiteGraph bad{standard_graph(StandardKind::complete, 3), bit(0) | bit(1)};
  CHECK_THROWS_AS(bad.validate(), NotBipartiteError);
}

TEST_CASE("induced subgraphs and connectivity") {
  Graph c6 = standard_graph(StandardKind::cycle, 6);
  Graph path = c6.induced(full_mask(5));
  CHECK(path.m() == 4);
  CHECK(path.is_connected());
  Graph two = c6.induced(bit(0) | bit(3));
  CHECK(!two.is_connected());
  CHECK(two.isolated_vertices() == full_mask(2));
}
