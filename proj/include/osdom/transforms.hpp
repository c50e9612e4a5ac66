#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osdom/graph.hpp"
#include "osdom/poset.hpp"
#include "osdom/set_family.hpp"

namespace osdom {

/// Origin bookkeeping: one entry per output element/vertex naming its role
/// in the construction and the input ids it derives from. Written as the
/// sidecar trace file by the CLI.
struct Trace {
  struct Entry {
    std::string role;
    std::vector<int> origin;
  };
  std::string scheme;
  std::vector<Entry> entries;
};

struct Transformed {
  Poset poset;
  Trace trace;
};

struct TransformedGraph {
  Graph graph;
  Trace trace;
};

struct TransformedBipartite {
  BipartiteGraph bipartite;
  std::vector<int> prime;   // poset element -> V1 vertex id, -1 if absent
  std::vector<int> dprime;  // poset element -> V2 vertex id, -1 if absent
  Trace trace;
};

/// P*: each mid a_i gains a private new top b_i and bottom c_i
/// (labels "b:<label>" and "c:<label>").
Transformed star_extension(const Poset& p);

/// Red_3(P): drop every mid-mid comparability from the closure, keep all
/// other closure relations, re-reduce. HeightError below height 4.
Transformed red3(const Poset& p);

/// P^m: every minimal element placed below every maximal one.
Transformed maxmin_closure(const Poset& p);

/// P_k(G): k layers of V(G) with covers at equal or adjacent vertices.
/// Labels "(layer,vertex-label)".
Transformed graded_poset(const Graph& g, int k);

/// B_4: height-four poset X^1 < Y^2 < X^3 < Y^4 with covers inherited from
/// the bipartite graph. IsolatedVertexError on isolated vertices.
Transformed bipartite_to_b4(const BipartiteGraph& b);

/// B(P): sides (Min u Mid)' and (Max u Mid)'', edge x'y'' iff x < y or
/// x = y in Mid.
TransformedBipartite bipartite_transformation(const Poset& p);

/// MD(P): graph on Mid(P), joining pairs with a common strict upper and a
/// common strict lower bound. ClassError outside P_3(k).
TransformedGraph middle_graph(const Poset& p);

/// H_u = Comp(P)[Mid u Max], H_d = Comp(P)[Min u Mid].
std::pair<TransformedGraph, TransformedGraph> hu_hd(const Poset& p);

/// P_3(F): Min = ground', Mid = members, Max = ground''; x' < F < y'' iff
/// x, y in F. CoverageError when some ground element lies in no member.
Transformed family_poset(const SetFamily& f);

}  // namespace osdom
