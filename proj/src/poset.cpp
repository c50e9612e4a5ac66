#include "osdom/poset.hpp"

#include <algorithm>

namespace osdom {

Poset Poset::build(int n, const std::vector<std::pair<int, int>>& pairs,
                   std::vector<std::string> labels) {
  if (n < 0) throw ParamError("negative element count");
  if (n > kMaxUniverse)
    throw SizeCapError("poset has " + std::to_string(n) + " elements, cap is " +
                       std::to_string(kMaxUniverse));
  Poset p;
  p.n_ = n;
  if (labels.empty()) {
    p.labels_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p.labels_[static_cast<std::size_t>(v)] = std::to_string(v);
  } else {
    if (static_cast<int>(labels.size()) != n)
      throw ParamError("label count does not match element count");
    p.labels_ = std::move(labels);
  }

  std::vector<Bits> succ(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw IndexError("pair id out of range");
    if (a == b) throw CycleError("reflexive pair " + p.labels_[static_cast<std::size_t>(a)]);
    succ[static_cast<std::size_t>(a)] |= bit(b);
  }

  // Kahn topological order; leftovers witness a cycle.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for_each_bit(succ[static_cast<std::size_t>(v)], [&](int u) { ++indeg[static_cast<std::size_t>(u)]; });
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head)
    for_each_bit(succ[static_cast<std::size_t>(order[head])], [&](int u) {
      if (--indeg[static_cast<std::size_t>(u)] == 0) order.push_back(u);
    });
  if (static_cast<int>(order.size()) != n)
    throw CycleError("input relation has a directed cycle");

  p.up_.assign(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Bits u = succ[static_cast<std::size_t>(*it)];
    for_each_bit(succ[static_cast<std::size_t>(*it)],
                 [&](int w) { u |= p.up_[static_cast<std::size_t>(w)]; });
    p.up_[static_cast<std::size_t>(*it)] = u;
  }
  p.finish();
  return p;
}

void Poset::finish() {
  down_.assign(static_cast<std::size_t>(n_), 0);
  for (int a = 0; a < n_; ++a)
    for_each_bit(up_[static_cast<std::size_t>(a)],
                 [&](int b) { down_[static_cast<std::size_t>(b)] |= bit(a); });

  cover_up_.assign(static_cast<std::size_t>(n_), 0);
  for (int a = 0; a < n_; ++a)
    for_each_bit(up_[static_cast<std::size_t>(a)], [&](int b) {
      // a prec b iff nothing sits strictly between.
      if ((up_[static_cast<std::size_t>(a)] & down_[static_cast<std::size_t>(b)]) == 0)
        cover_up_[static_cast<std::size_t>(a)] |= bit(b);
    });

  max_ = min_ = 0;
  for (int v = 0; v < n_; ++v) {
    if (up_[static_cast<std::size_t>(v)] == 0) max_ |= bit(v);
    if (down_[static_cast<std::size_t>(v)] == 0) min_ |= bit(v);
  }
  mid_ = elements() & ~(max_ | min_);
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for_each_bit(cover_up_[static_cast<std::size_t>(a)],
                 [&](int b) { out.emplace_back(a, b); });
  std::sort(out.begin(), out.end());
  return out;
}

Bits Poset::up_down_set(Bits s, UpDownMode mode) const {
  s &= elements();
  switch (mode) {
    case UpDownMode::up: {
      Bits r = 0;
      for_each_bit(s, [&](int v) { r |= up_[static_cast<std::size_t>(v)]; });
      return r;
    }
    case UpDownMode::down: {
      Bits r = 0;
      for_each_bit(s, [&](int v) { r |= down_[static_cast<std::size_t>(v)]; });
      return r;
    }
    case UpDownMode::common_up: {
      Bits r = elements();
      for_each_bit(s, [&](int v) { r &= up_[static_cast<std::size_t>(v)]; });
      return r;
    }
    case UpDownMode::common_down: {
      Bits r = elements();
      for_each_bit(s, [&](int v) { r &= down_[static_cast<std::size_t>(v)]; });
      return r;
    }
  }
  throw ParamError("unknown up/down mode");
}

std::vector<int> Poset::chain_through() const {
  // Longest chain ending at / starting from each element over the cover DAG.
  std::vector<int> up_len(static_cast<std::size_t>(n_), 1);
  std::vector<int> down_len(static_cast<std::size_t>(n_), 1);
  std::vector<int> order;  // ascending by |down set| works as a topological order
  order.reserve(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return bit_count(down_[static_cast<std::size_t>(a)]) < bit_count(down_[static_cast<std::size_t>(b)]);
  });
  for (int v : order)
    for_each_bit(down_[static_cast<std::size_t>(v)], [&](int u) {
      down_len[static_cast<std::size_t>(v)] =
          std::max(down_len[static_cast<std::size_t>(v)], down_len[static_cast<std::size_t>(u)] + 1);
    });
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for_each_bit(up_[static_cast<std::size_t>(*it)], [&](int u) {
      up_len[static_cast<std::size_t>(*it)] =
          std::max(up_len[static_cast<std::size_t>(*it)], up_len[static_cast<std::size_t>(u)] + 1);
    });
  std::vector<int> through(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v)
    through[static_cast<std::size_t>(v)] =
        up_len[static_cast<std::size_t>(v)] + down_len[static_cast<std::size_t>(v)] - 1;
  return through;
}

int Poset::height() const {
  int h = 0;
  for (int t : chain_through()) h = std::max(h, t);
  return h;
}

bool Poset::in_class(int l, int k) const {
  if (l < 1 || k < 1) throw ParamError("class parameters must be positive");
  if (height() != k) return false;
  for (int t : chain_through())
    if (t < l) return false;
  return true;
}

int Poset::index_of_label(const std::string& s) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[static_cast<std::size_t>(v)] == s) return v;
  throw IndexError("no element labeled '" + s + "'");
}

Graph Poset::comparability_graph() const {
  Graph g(n_, labels_);
  for (int a = 0; a < n_; ++a)
    for_each_bit(up_[static_cast<std::size_t>(a)], [&](int b) { g.add_edge(a, b); });
  return g;
}

Poset Poset::dual() const {
  Poset d;
  d.n_ = n_;
  d.labels_ = labels_;
  d.up_ = down_;
  d.finish();
  return d;
}

Poset cartesian_product(const Poset& p1, const Poset& p2) {
  long long total = static_cast<long long>(p1.n()) * p2.n();
  if (total > kMaxUniverse)
    throw SizeCapError("product would have " + std::to_string(total) + " elements");
  int n2 = p2.n();
  auto id = [n2](int a, int b) { return a * n2 + b; };
  std::vector<std::string> labels(static_cast<std::size_t>(total));
  for (int a = 0; a < p1.n(); ++a)
    for (int b = 0; b < n2; ++b)
      labels[static_cast<std::size_t>(id(a, b))] = "(" + p1.label(a) + "," + p2.label(b) + ")";
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < p1.n(); ++a)
    for (int b = 0; b < n2; ++b)
      for (int c = 0; c < p1.n(); ++c)
        for (int d = 0; d < n2; ++d) {
          bool le1 = (a == c) || p1.less(a, c);
          bool le2 = (b == d) || p2.less(b, d);
          if (le1 && le2 && !(a == c && b == d)) pairs.emplace_back(id(a, b), id(c, d));
        }
  return Poset::build(static_cast<int>(total), pairs, std::move(labels));
}

Poset poset_of_bipartite(const BipartiteGraph& b) {
  b.validate();
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < b.graph.n(); ++v)
    if (has_bit(b.left, v))
      for_each_bit(b.graph.neighbors(v), [&](int u) { pairs.emplace_back(v, u); });
  return Poset::build(b.graph.n(), pairs, b.graph.labels());
}

namespace {

bool poset_iso_rec(const Poset& p1, const Poset& p2, std::vector<int>& map,
                   Bits used, int v) {
  int n = p1.n();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (has_bit(used, w)) continue;
    if (bit_count(p1.strict_up(v)) != bit_count(p2.strict_up(w))) continue;
    if (bit_count(p1.strict_down(v)) != bit_count(p2.strict_down(w))) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      if (p1.less(u, v) != p2.less(map[static_cast<std::size_t>(u)], w)) ok = false;
      if (p1.less(v, u) != p2.less(w, map[static_cast<std::size_t>(u)])) ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    if (poset_iso_rec(p1, p2, map, used | bit(w), v + 1)) return true;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const Poset& p1, const Poset& p2, int size_cap) {
  if (p1.n() != p2.n()) return false;
  if (p1.n() > size_cap)
    throw SizeCapError("poset isomorphism capped at " + std::to_string(size_cap) + " elements");
  if (bit_count(p1.max_set()) != bit_count(p2.max_set())) return false;
  if (bit_count(p1.min_set()) != bit_count(p2.min_set())) return false;
  auto profile = [](const Poset& p) {
    std::vector<std::pair<int, int>> prof;
    prof.reserve(static_cast<std::size_t>(p.n()));
    for (int v = 0; v < p.n(); ++v)
      prof.emplace_back(bit_count(p.strict_up(v)), bit_count(p.strict_down(v)));
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  if (profile(p1) != profile(p2)) return false;
  std::vector<int> map(static_cast<std::size_t>(p1.n()), -1);
  return poset_iso_rec(p1, p2, map, 0, 0);
}

}  // namespace osdom
