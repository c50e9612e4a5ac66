#pragma once

#include <optional>
#include <vector>

#include "osdom/graph.hpp"

namespace osdom {

enum class Pattern { c4, c5, c6, three_sun, weakly_chordal, chordal_bipartite };

struct PatternReport {
  bool free = true;
  std::vector<int> witness;  // vertex set of one induced copy when !free
};

/// Induced copy of exactly `len`-cycle, depth-first over induced paths.
/// Size cap ~14 vertices is the documented desk-scale bound.
std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int len);

/// Any induced cycle with at least `minlen` vertices.
std::optional<std::vector<int>> find_induced_cycle_at_least(const Graph& g, int minlen);

/// No induced copy of the named pattern; for chordal_bipartite the input
/// must already be bipartite (NotBipartiteError otherwise).
PatternReport forbidden_subgraph_free(const Graph& g, Pattern pattern);

/// (3-sun, C4, C5, C6)-free, the hypothesis class of the square-graph
/// corollaries.
PatternReport sun_c456_free(const Graph& g);

/// Backtracking isomorphism with degree profile pruning; SizeCapError
/// above the cap.
bool are_isomorphic(const Graph& g1, const Graph& g2, int size_cap = 12);

/// The 3-sun: C6 with one alternating triple turned into a triangle.
Graph three_sun();

}  // namespace osdom
