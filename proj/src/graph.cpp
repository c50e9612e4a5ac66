#include "osdom/graph.hpp"

#include <algorithm>
#include <array>

namespace osdom {

Graph::Graph(int n, std::vector<std::string> labels) : n_(n) {
  if (n < 0) throw ParamError("negative vertex count");
  if (n > kMaxUniverse)
    throw SizeCapError("graph has " + std::to_string(n) +
                       " vertices, cap is " + std::to_string(kMaxUniverse));
  adj_.assign(static_cast<std::size_t>(n), 0);
  if (labels.empty()) {
    labels_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels_[static_cast<std::size_t>(v)] = std::to_string(v);
  } else {
    if (static_cast<int>(labels.size()) != n)
      throw ParamError("label count does not match vertex count");
    labels_ = std::move(labels);
  }
}

int Graph::m() const {
  int total = 0;
  for (Bits a : adj_) total += bit_count(a);
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw IndexError("edge endpoint out of range");
  if (u == v) throw ParamError("loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(adj_[static_cast<std::size_t>(u)] & ~full_mask(u + 1),
                 [&](int v) { out.emplace_back(u, v); });
  return out;
}

Graph Graph::complement() const {
  Graph h(n_, labels_);
  for (int v = 0; v < n_; ++v)
    h.adj_[static_cast<std::size_t>(v)] =
        full_mask(n_) & ~adj_[static_cast<std::size_t>(v)] & ~bit(v);
  return h;
}

Graph Graph::induced(Bits keep) const {
  std::vector<int> verts = bits_to_vector(keep & vertices());
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (int v : verts) labels.push_back(labels_[static_cast<std::size_t>(v)]);
  Graph h(static_cast<int>(verts.size()), std::move(labels));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  Bits seen = bit(0);
  Bits frontier = bit(0);
  while (frontier) {
    Bits next = 0;
    for_each_bit(frontier, [&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == vertices();
}

Bits Graph::isolated_vertices() const {
  Bits iso = 0;
  for (int v = 0; v < n_; ++v)
    if (adj_[static_cast<std::size_t>(v)] == 0) iso |= bit(v);
  return iso;
}

std::vector<std::vector<int>> Graph::distances() const {
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n_),
                                  std::vector<int>(static_cast<std::size_t>(n_), -1));
  for (int s = 0; s < n_; ++s) {
    Bits seen = bit(s);
    Bits frontier = bit(s);
    int dist = 0;
    while (frontier) {
      for_each_bit(frontier, [&](int v) { d[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = dist; });
      Bits next = 0;
      for_each_bit(frontier, [&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
      frontier = next & ~seen;
      seen |= frontier;
      ++dist;
    }
  }
  return d;
}

Bits Graph::greedy_clique() const {
  Bits best = 0;
  for (int seed = 0; seed < n_; ++seed) {
    Bits clique = bit(seed);
    Bits cand = adj_[static_cast<std::size_t>(seed)];
    while (cand) {
      int pick = -1, pick_deg = -1;
      for_each_bit(cand, [&](int v) {
        int deg = bit_count(adj_[static_cast<std::size_t>(v)] & cand);
        if (deg > pick_deg) { pick_deg = deg; pick = v; }
      });
      clique |= bit(pick);
      cand &= adj_[static_cast<std::size_t>(pick)];
    }
    if (bit_count(clique) > bit_count(best)) best = clique;
  }
  return best;
}

std::vector<std::array<int, 3>> Graph::triangles() const {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n_; ++a)
    for_each_bit(adj_[static_cast<std::size_t>(a)] & ~full_mask(a + 1), [&](int b) {
      Bits common = adj_[static_cast<std::size_t>(a)] & adj_[static_cast<std::size_t>(b)] & ~full_mask(b + 1);
      for_each_bit(common, [&](int c) { out.push_back({a, b, c}); });
    });
  return out;
}

void BipartiteGraph::validate() const {
  Bits l = left & graph.vertices();
  for (int v = 0; v < graph.n(); ++v) {
    Bits nb = graph.neighbors(v);
    if (has_bit(l, v) ? (nb & l) != 0 : (nb & ~l & graph.vertices()) != 0)
      throw NotBipartiteError("edge inside one side of the bipartition");
  }
}

Graph standard_graph(StandardKind kind, int a, int b) {
  switch (kind) {
    case StandardKind::path: {
      if (a < 1) throw ParamError("path needs at least one vertex");
      Graph g(a);
      for (int v = 0; v + 1 < a; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case StandardKind::cycle: {
      if (a < 3) throw ParamError("cycle needs at least three vertices");
      Graph g(a);
      for (int v = 0; v < a; ++v) g.add_edge(v, (v + 1) % a);
      return g;
    }
    case StandardKind::complete: {
      if (a < 1) throw ParamError("complete graph needs at least one vertex");
      Graph g(a);
      for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) g.add_edge(u, v);
      return g;
    }
    case StandardKind::complete_bipartite: {
      if (a < 1 || b < 1) throw ParamError("complete bipartite sides must be positive");
      Graph g(a + b);
      for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
      return g;
    }
  }
  throw ParamError("unknown standard graph kind");
}

Graph square(const Graph& g) {
  Graph h(g.n(), g.labels());
  for (int v = 0; v < g.n(); ++v) {
    Bits reach = g.neighbors(v);
    for_each_bit(g.neighbors(v), [&](int u) { reach |= g.neighbors(u); });
    for_each_bit(reach & ~bit(v) & ~full_mask(v + 1), [&](int u) { h.add_edge(v, u); });
  }
  return h;
}

std::vector<Bits> two_packings(const Graph& g, bool maximal_only) {
  Graph sq = square(g);
  std::vector<Bits> out;
  // Independent sets of the square, depth-first over vertex indices.
  std::vector<std::pair<Bits, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [cur, next] = stack.back();
    stack.pop_back();
    bool extended = false;
    for (int v = next; v < g.n(); ++v) {
      if (sq.neighbors(v) & cur) continue;
      stack.push_back({cur | bit(v), v + 1});
      extended = true;
    }
    if (!maximal_only) {
      out.push_back(cur);
    } else if (!extended) {
      // No extension with a higher index; still need maximality overall.
      bool maximal = true;
      for (int v = 0; v < g.n() && maximal; ++v)
        if (!has_bit(cur, v) && (sq.neighbors(v) & cur) == 0) maximal = false;
      if (maximal && cur != 0) out.push_back(cur);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BipartiteGraph extended_double_cover(const Graph& g) {
  int n = g.n();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) labels.push_back("x:" + g.label(i));
  for (int i = 0; i < n; ++i) labels.push_back("y:" + g.label(i));
  Graph h(2 * n, std::move(labels));
  for (int i = 0; i < n; ++i) {
    h.add_edge(i, n + i);
    for_each_bit(g.neighbors(i), [&](int j) { h.add_edge(i, n + j); });
  }
  return BipartiteGraph{std::move(h), full_mask(n)};
}

std::optional<Bits> bipartition_of(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  Bits left = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    left |= bit(s);
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      bool ok = true;
      for_each_bit(g.neighbors(v), [&](int u) {
        if (color[static_cast<std::size_t>(u)] == -1) {
          color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
          if (color[static_cast<std::size_t>(u)] == 0) left |= bit(u);
          queue.push_back(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return left;
}

}  // namespace osdom
