#include "doctest.h"
#include "osdom/io.hpp"
#include "osdom/verify.hpp"

using namespace osdom;

TEST_CASE("poset round trip") {
  std::string text =
      "# a comment\n"
      "poset 3\n"
      "labels a b c\n"
      "cover 0 1  # trailing comment\n"
      "cover 1 2\n"
      "cover 0 2\n";  // shortcut pair, reduced on read
  Poset p = read_poset(text);
  std::string canonical = write_poset(p);
  CHECK(canonical == "poset 3\nlabels a b c\ncover 0 1\ncover 1 2\n");
  CHECK(write_poset(read_poset(canonical)) == canonical);
}

TEST_CASE("poset format errors carry line numbers") {
  CHECK_THROWS_WITH_AS(read_poset("poset 2\ncover 0\n"), doctest::Contains("line 2"),
                       FormatError);
  CHECK_THROWS_AS(read_poset("cover 0 1\n"), FormatError);
  CHECK_THROWS_AS(read_poset(""), FormatError);
  CHECK_THROWS_AS(read_poset("poset 2\nfrob 1\n"), FormatError);
}

TEST_CASE("graph round trip and errors") {
  std::string text = "p edge 3 2\ne 1 2\ne 2 3\n";
  Graph g = read_graph(text);
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(write_graph(read_graph(write_graph(g))) == write_graph(g));
  CHECK_THROWS_AS(read_graph("p edge 3 2\ne 1 2\n"), FormatError);  // edge count mismatch
  CHECK_THROWS_AS(read_graph("p edge 2 1\ne 1 5\n"), FormatError);
}

TEST_CASE("bipartite round trip") {
  BipartiteGraph b = total_demo_bipartite();
  std::string text = write_bipartite(b);
  BipartiteGraph back = read_bipartite(text);
  CHECK(graphs_equal(b.graph, back.graph));
  CHECK(b.left == back.left);
  CHECK(write_bipartite(back) == text);
  CHECK_THROWS_AS(read_bipartite("p edge 2 1\ne 1 2\ns 1 L\n"), FormatError);  // missing side
}

TEST_CASE("family round trip") {
  SetFamily f = read_family("family 3 2\n0 1\n1 2\n");
  CHECK(f.ground == 3);
  CHECK(f.members == std::vector<Bits>{bit(0) | bit(1), bit(1) | bit(2)});
  CHECK(write_family(read_family(write_family(f))) == write_family(f));
  CHECK_THROWS_AS(read_family("family 3 2\n0 1\n"), FormatError);
  CHECK_THROWS_AS(read_family("family 2 1\n0 4\n"), FormatError);
}

TEST_CASE("bundled data files agree with the built-in worked examples") {
  std::string dir = OSDOM_DATA_DIR;
  CHECK(posets_equal(read_poset(read_text_file(dir + "/fig1P.poset")), twin_poset_p()));
  CHECK(posets_equal(read_poset(read_text_file(dir + "/fig1R.poset")), twin_poset_r()));
  CHECK(posets_equal(read_poset(read_text_file(dir + "/fig3.poset")), reduction_demo_poset()));
  CHECK(posets_equal(read_poset(read_text_file(dir + "/fig6.poset")), bp_gap_poset()));
  CHECK(posets_equal(read_poset(read_text_file(dir + "/fig7.poset")), selfdual_helly_poset()));
  CHECK(posets_equal(read_poset(read_text_file(dir + "/fig8.poset")), noncomplete_helly_poset()));
  BipartiteGraph b5 = read_bipartite(read_text_file(dir + "/fig5.bip"));
  CHECK(graphs_equal(b5.graph, total_demo_bipartite().graph));
  CHECK(b5.left == total_demo_bipartite().left);
}

TEST_CASE("format grammar mentions every format") {
  std::string g = format_grammar();
  for (const char* key : {"poset", "p edge", "family", "p cnf", "scheme"})
    CHECK(g.find(key) != std::string::npos);
}
