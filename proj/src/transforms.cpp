#include "osdom/transforms.hpp"

#include <algorithm>

namespace osdom {

namespace {

void require_p3k(const Poset& p, const char* who) {
  int h = p.height();
  if (h < 3 || !p.in_class(3, h))
    throw ClassError(std::string(who) + " needs a poset in P_3(k), k >= 3");
}

}  // namespace

Transformed star_extension(const Poset& p) {
  std::vector<int> mids = bits_to_vector(p.mid_set());
  int n = p.n();
  int total = n + 2 * static_cast<int>(mids.size());
  if (total > kMaxUniverse) throw SizeCapError("star extension exceeds the element cap");
  std::vector<std::string> labels(static_cast<std::size_t>(total));
  Trace trace;
  trace.scheme = "star_extension";
  trace.entries.resize(static_cast<std::size_t>(total));
  for (int v = 0; v < n; ++v) {
    labels[static_cast<std::size_t>(v)] = p.label(v);
    trace.entries[static_cast<std::size_t>(v)] = {"kept", {v}};
  }
  std::vector<std::pair<int, int>> pairs = p.cover_pairs();
  for (std::size_t i = 0; i < mids.size(); ++i) {
    int a = mids[i];
    int top = n + 2 * static_cast<int>(i);
    int bottom = top + 1;
    labels[static_cast<std::size_t>(top)] = "b:" + p.label(a);
    labels[static_cast<std::size_t>(bottom)] = "c:" + p.label(a);
    trace.entries[static_cast<std::size_t>(top)] = {"b", {a}};
    trace.entries[static_cast<std::size_t>(bottom)] = {"c", {a}};
    pairs.emplace_back(a, top);
    pairs.emplace_back(bottom, a);
  }
  return Transformed{Poset::build(total, pairs, std::move(labels)), std::move(trace)};
}

Transformed red3(const Poset& p) {
  if (p.height() < 4) throw HeightError("red3 needs height at least 4");
  Bits mid = p.mid_set();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < p.n(); ++a)
    for_each_bit(p.strict_up(a), [&](int b) {
      if (has_bit(mid, a) && has_bit(mid, b)) return;  // mid-mid dropped
      pairs.emplace_back(a, b);
    });
  Trace trace;
  trace.scheme = "red3";
  trace.entries.resize(static_cast<std::size_t>(p.n()));
  for (int v = 0; v < p.n(); ++v) trace.entries[static_cast<std::size_t>(v)] = {"kept", {v}};
  return Transformed{Poset::build(p.n(), pairs, p.labels()), std::move(trace)};
}

Transformed maxmin_closure(const Poset& p) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < p.n(); ++a)
    for_each_bit(p.strict_up(a), [&](int b) { pairs.emplace_back(a, b); });
  for_each_bit(p.min_set(), [&](int x) {
    for_each_bit(p.max_set() & ~p.strict_up(x) & ~bit(x),
                 [&](int y) { pairs.emplace_back(x, y); });
  });
  Trace trace;
  trace.scheme = "maxmin_closure";
  trace.entries.resize(static_cast<std::size_t>(p.n()));
  for (int v = 0; v < p.n(); ++v) trace.entries[static_cast<std::size_t>(v)] = {"kept", {v}};
  // Adding min<max pairs cannot create a cycle; build would throw if it did.
  return Transformed{Poset::build(p.n(), pairs, p.labels()), std::move(trace)};
}

Transformed graded_poset(const Graph& g, int k) {
  if (k < 2) throw ParamError("graded poset needs k >= 2");
  if (g.n() < 1) throw ParamError("graded poset needs a nonempty graph");
  long long total = static_cast<long long>(k) * g.n();
  if (total > kMaxUniverse) throw SizeCapError("graded poset exceeds the element cap");
  int n = g.n();
  auto id = [n](int layer, int v) { return layer * n + v; };  // layer 0-based
  std::vector<std::string> labels(static_cast<std::size_t>(total));
  Trace trace;
  trace.scheme = "graded_poset";
  trace.entries.resize(static_cast<std::size_t>(total));
  for (int l = 0; l < k; ++l)
    for (int v = 0; v < n; ++v) {
      labels[static_cast<std::size_t>(id(l, v))] =
          "(" + std::to_string(l + 1) + "," + g.label(v) + ")";
      trace.entries[static_cast<std::size_t>(id(l, v))] = {"layer" + std::to_string(l + 1), {v}};
    }
  std::vector<std::pair<int, int>> pairs;
  for (int l = 0; l + 1 < k; ++l)
    for (int v = 0; v < n; ++v) {
      pairs.emplace_back(id(l, v), id(l + 1, v));
      for_each_bit(g.neighbors(v), [&](int u) { pairs.emplace_back(id(l, v), id(l + 1, u)); });
    }
  return Transformed{Poset::build(static_cast<int>(total), pairs, std::move(labels)),
                     std::move(trace)};
}

Transformed bipartite_to_b4(const BipartiteGraph& b) {
  b.validate();
  if (b.graph.isolated_vertices() != 0)
    throw IsolatedVertexError("B4 needs a bipartite graph without isolated vertices");
  std::vector<int> xs = bits_to_vector(b.left);
  std::vector<int> ys = bits_to_vector(b.right());
  int nx = static_cast<int>(xs.size());
  int ny = static_cast<int>(ys.size());
  int total = 2 * nx + 2 * ny;
  if (total > kMaxUniverse) throw SizeCapError("B4 exceeds the element cap");
  // Layers: L1 = X^1, L2 = Y^2, L3 = X^3, L4 = Y^4.
  auto x_id = [&](int i, int layer) { return layer == 1 ? i : nx + ny + i; };
  auto y_id = [&](int j, int layer) { return layer == 2 ? nx + j : 2 * nx + ny + j; };
  std::vector<std::string> labels(static_cast<std::size_t>(total));
  Trace trace;
  trace.scheme = "b4";
  trace.entries.resize(static_cast<std::size_t>(total));
  for (int i = 0; i < nx; ++i) {
    labels[static_cast<std::size_t>(x_id(i, 1))] = b.graph.label(xs[static_cast<std::size_t>(i)]) + "^1";
    labels[static_cast<std::size_t>(x_id(i, 3))] = b.graph.label(xs[static_cast<std::size_t>(i)]) + "^3";
    trace.entries[static_cast<std::size_t>(x_id(i, 1))] = {"L1", {xs[static_cast<std::size_t>(i)]}};
    trace.entries[static_cast<std::size_t>(x_id(i, 3))] = {"L3", {xs[static_cast<std::size_t>(i)]}};
  }
  for (int j = 0; j < ny; ++j) {
    labels[static_cast<std::size_t>(y_id(j, 2))] = b.graph.label(ys[static_cast<std::size_t>(j)]) + "^2";
    labels[static_cast<std::size_t>(y_id(j, 4))] = b.graph.label(ys[static_cast<std::size_t>(j)]) + "^4";
    trace.entries[static_cast<std::size_t>(y_id(j, 2))] = {"L2", {ys[static_cast<std::size_t>(j)]}};
    trace.entries[static_cast<std::size_t>(y_id(j, 4))] = {"L4", {ys[static_cast<std::size_t>(j)]}};
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      if (!b.graph.has_edge(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)])) continue;
      pairs.emplace_back(x_id(i, 1), y_id(j, 2));
      pairs.emplace_back(y_id(j, 2), x_id(i, 3));
      pairs.emplace_back(x_id(i, 3), y_id(j, 4));
    }
  return Transformed{Poset::build(total, pairs, std::move(labels)), std::move(trace)};
}

TransformedBipartite bipartite_transformation(const Poset& p) {
  std::vector<int> prime(static_cast<std::size_t>(p.n()), -1);
  std::vector<int> dprime(static_cast<std::size_t>(p.n()), -1);
  int idx = 0;
  for (int v = 0; v < p.n(); ++v)
    if (has_bit(p.min_set() | p.mid_set(), v)) prime[static_cast<std::size_t>(v)] = idx++;
  int v1 = idx;
  for (int v = 0; v < p.n(); ++v)
    if (has_bit(p.max_set() | p.mid_set(), v)) dprime[static_cast<std::size_t>(v)] = idx++;
  if (idx > kMaxUniverse) throw SizeCapError("bipartite transformation exceeds the vertex cap");
  std::vector<std::string> labels(static_cast<std::size_t>(idx));
  Trace trace;
  trace.scheme = "bipartite_transformation";
  trace.entries.resize(static_cast<std::size_t>(idx));
  for (int v = 0; v < p.n(); ++v) {
    if (prime[static_cast<std::size_t>(v)] >= 0) {
      labels[static_cast<std::size_t>(prime[static_cast<std::size_t>(v)])] = p.label(v) + "'";
      trace.entries[static_cast<std::size_t>(prime[static_cast<std::size_t>(v)])] = {"prime", {v}};
    }
    if (dprime[static_cast<std::size_t>(v)] >= 0) {
      labels[static_cast<std::size_t>(dprime[static_cast<std::size_t>(v)])] = p.label(v) + "''";
      trace.entries[static_cast<std::size_t>(dprime[static_cast<std::size_t>(v)])] = {"dprime", {v}};
    }
  }
  Graph g(idx, std::move(labels));
  for (int x = 0; x < p.n(); ++x) {
    if (prime[static_cast<std::size_t>(x)] < 0) continue;
    for_each_bit(p.strict_up(x), [&](int y) {
      if (dprime[static_cast<std::size_t>(y)] >= 0)
        g.add_edge(prime[static_cast<std::size_t>(x)], dprime[static_cast<std::size_t>(y)]);
    });
    if (has_bit(p.mid_set(), x))
      g.add_edge(prime[static_cast<std::size_t>(x)], dprime[static_cast<std::size_t>(x)]);
  }
  BipartiteGraph bg{std::move(g), full_mask(v1)};
  bg.validate();
  return TransformedBipartite{std::move(bg), std::move(prime), std::move(dprime), std::move(trace)};
}

TransformedGraph middle_graph(const Poset& p) {
  require_p3k(p, "middle_graph");
  std::vector<int> mids = bits_to_vector(p.mid_set());
  std::vector<std::string> labels;
  labels.reserve(mids.size());
  for (int m : mids) labels.push_back(p.label(m));
  Graph g(static_cast<int>(mids.size()), std::move(labels));
  Trace trace;
  trace.scheme = "middle_graph";
  for (int m : mids) trace.entries.push_back({"mid", {m}});
  for (std::size_t i = 0; i < mids.size(); ++i)
    for (std::size_t j = i + 1; j < mids.size(); ++j) {
      Bits cu = p.strict_up(mids[i]) & p.strict_up(mids[j]);
      Bits cd = p.strict_down(mids[i]) & p.strict_down(mids[j]);
      if (cu != 0 && cd != 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return TransformedGraph{std::move(g), std::move(trace)};
}

std::pair<TransformedGraph, TransformedGraph> hu_hd(const Poset& p) {
  require_p3k(p, "hu_hd");
  Graph comp = p.comparability_graph();
  Bits upper = p.mid_set() | p.max_set();
  Bits lower = p.min_set() | p.mid_set();
  TransformedGraph hu{comp.induced(upper), Trace{"hu", {}}};
  TransformedGraph hd{comp.induced(lower), Trace{"hd", {}}};
  for (int v : bits_to_vector(upper)) hu.trace.entries.push_back({"kept", {v}});
  for (int v : bits_to_vector(lower)) hd.trace.entries.push_back({"kept", {v}});
  return {std::move(hu), std::move(hd)};
}

Transformed family_poset(const SetFamily& f) {
  f.validate();
  if (f.ground < 1 || f.members.empty())
    throw ParamError("family poset needs a nonempty ground set and at least one member");
  Bits covered = 0;
  for (Bits m : f.members) {
    if (m == 0) throw ParamError("family poset members must be nonempty");
    covered |= m;
  }
  if (covered != full_mask(f.ground))
    throw CoverageError("some ground element lies in no member");
  int g = f.ground;
  int mcount = static_cast<int>(f.members.size());
  int total = 2 * g + mcount;
  if (total > kMaxUniverse) throw SizeCapError("family poset exceeds the element cap");
  // ids: 0..g-1 = X', g..g+mcount-1 = members, then X''.
  std::vector<std::string> labels(static_cast<std::size_t>(total));
  Trace trace;
  trace.scheme = "family_poset";
  trace.entries.resize(static_cast<std::size_t>(total));
  for (int x = 0; x < g; ++x) {
    labels[static_cast<std::size_t>(x)] = std::to_string(x) + "'";
    labels[static_cast<std::size_t>(g + mcount + x)] = std::to_string(x) + "''";
    trace.entries[static_cast<std::size_t>(x)] = {"prime", {x}};
    trace.entries[static_cast<std::size_t>(g + mcount + x)] = {"dprime", {x}};
  }
  for (int i = 0; i < mcount; ++i) {
    std::string body;
    for_each_bit(f.members[static_cast<std::size_t>(i)], [&](int x) {
      if (!body.empty()) body += ",";
      body += std::to_string(x);
    });
    labels[static_cast<std::size_t>(g + i)] = "F" + std::to_string(i) + "{" + body + "}";
    trace.entries[static_cast<std::size_t>(g + i)] = {"member", bits_to_vector(f.members[static_cast<std::size_t>(i)])};
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < mcount; ++i)
    for_each_bit(f.members[static_cast<std::size_t>(i)], [&](int x) {
      pairs.emplace_back(x, g + i);
      pairs.emplace_back(g + i, g + mcount + x);
    });
  return Transformed{Poset::build(total, pairs, std::move(labels)), std::move(trace)};
}

}  // namespace osdom
