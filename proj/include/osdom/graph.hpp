#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osdom/bits.hpp"
#include "osdom/errors.hpp"

namespace osdom {

/// Simple undirected graph on at most 64 vertices, adjacency kept as one
/// bitmask per vertex. Immutable once built (the mutators are only used
/// by constructors and codecs before a value is shared).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<std::string> labels = {});

  int n() const { return n_; }
  int m() const;
  Bits vertices() const { return full_mask(n_); }

  bool has_edge(int u, int v) const { return has_bit(adj_[u], v); }
  Bits neighbors(int v) const { return adj_[v]; }
  Bits closed_neighbors(int v) const { return adj_[v] | bit(v); }
  int degree(int v) const { return bit_count(adj_[v]); }

  void add_edge(int u, int v);

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(int v, std::string s) { labels_[v] = std::move(s); }

  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;
  /// Subgraph induced by `keep`; vertex i of the result is the i-th set bit.
  Graph induced(Bits keep) const;
  bool is_connected() const;
  Bits isolated_vertices() const;

  /// All-pairs distances by BFS; -1 for unreachable pairs.
  std::vector<std::vector<int>> distances() const;

  /// Greedily grown clique, used as a cheap chromatic lower bound.
  Bits greedy_clique() const;

  /// All triangles as sorted index triples, lexicographic order.
  std::vector<std::array<int, 3>> triangles() const;

 private:
  int n_ = 0;
  std::vector<Bits> adj_;
  std::vector<std::string> labels_;
};

/// Graph with a fixed bipartition; every edge must join left to right.
struct BipartiteGraph {
  Graph graph;
  Bits left = 0;  // right side = vertices() & ~left

  Bits right() const { return graph.vertices() & ~left; }
  void validate() const;
};

enum class StandardKind { path, cycle, complete, complete_bipartite };

/// Canonical labeled P_n, C_k, K_n and K_{p,q} instances.
Graph standard_graph(StandardKind kind, int a, int b = 0);

/// dist <= 2 adjacency on the same vertex set.
Graph square(const Graph& g);

/// S is a 2-packing iff pairwise distances exceed 2, i.e. S is independent
/// in square(g). Returns every 2-packing (including the empty set) or only
/// the inclusion-maximal ones.
std::vector<Bits> two_packings(const Graph& g, bool maximal_only);

/// Alon's extended double cover: X u Y with x_i ~ y_j iff i=j or ij in E.
BipartiteGraph extended_double_cover(const Graph& g);

/// Attempts a 2-coloring; nullopt when the graph has an odd cycle.
std::optional<Bits> bipartition_of(const Graph& g);

/// Same vertex count and identical adjacency (labels ignored).
inline bool graphs_equal(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return false;
  for (int v = 0; v < a.n(); ++v)
    if (a.neighbors(v) != b.neighbors(v)) return false;
  return true;
}

}  // namespace osdom
