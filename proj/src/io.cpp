#include "osdom/io.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

namespace osdom {

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> rows;  // (line number, content)

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (!blank) rows.emplace_back(no, line);
    }
  }
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw FormatError(what + " (line " + std::to_string(line) + ")");
}

}  // namespace

Poset read_poset(const std::string& text) {
  Lines lines(text);
  if (lines.rows.empty()) throw FormatError("empty poset file");
  int n = -1;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (auto& [no, row] : lines.rows) {
    std::istringstream ls(row);
    std::string verb;
    ls >> verb;
    if (verb == "poset") {
      if (!(ls >> n) || n < 0) fail(no, "bad element count");
    } else if (verb == "labels") {
      if (n < 0) fail(no, "labels before the poset header");
      labels.assign(static_cast<std::size_t>(n), "");
      for (int i = 0; i < n; ++i)
        if (!(ls >> labels[static_cast<std::size_t>(i)])) fail(no, "expected one label per element");
    } else if (verb == "cover") {
      if (n < 0) fail(no, "cover before the poset header");
      int a, b;
      if (!(ls >> a >> b)) fail(no, "cover needs two indices");
      covers.emplace_back(a, b);
    } else {
      fail(no, "unknown statement '" + verb + "'");
    }
    std::string extra;
    if (ls >> extra) fail(no, "trailing tokens");
  }
  if (n < 0) throw FormatError("missing 'poset <n>' header");
  return Poset::build(n, covers, std::move(labels));
}

std::string write_poset(const Poset& p) {
  std::ostringstream out;
  out << "poset " << p.n() << "\n";
  bool default_labels = true;
  for (int v = 0; v < p.n(); ++v)
    if (p.label(v) != std::to_string(v)) default_labels = false;
  if (!default_labels && p.n() > 0) {
    out << "labels";
    for (int v = 0; v < p.n(); ++v) out << " " << p.label(v);
    out << "\n";
  }
  for (auto [a, b] : p.cover_pairs()) out << "cover " << a << " " << b << "\n";
  return out.str();
}

namespace {

Graph read_graph_lines(const Lines& lines, std::vector<std::pair<int, char>>* sides) {
  int n = -1, m = -1;
  int edges_seen = 0;
  Graph g;
  std::vector<std::string> labels;
  std::vector<std::tuple<int, int, int>> edge_rows;
  for (auto& [no, row] : lines.rows) {
    std::istringstream ls(row);
    std::string verb;
    ls >> verb;
    if (verb == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        fail(no, "bad 'p edge <n> <m>' header");
      labels.assign(static_cast<std::size_t>(n), "");
    } else if (verb == "e") {
      if (n < 0) fail(no, "edge before the header");
      int u, v;
      if (!(ls >> u >> v)) fail(no, "edge needs two endpoints");
      edge_rows.emplace_back(no, u, v);
      ++edges_seen;
    } else if (verb == "l") {
      if (n < 0) fail(no, "label before the header");
      int u;
      std::string name;
      if (!(ls >> u >> name) || u < 1 || u > n) fail(no, "bad label row");
      labels[static_cast<std::size_t>(u - 1)] = name;
    } else if (verb == "s" && sides != nullptr) {
      if (n < 0) fail(no, "side before the header");
      int u;
      std::string side;
      if (!(ls >> u >> side) || u < 1 || u > n || (side != "L" && side != "R"))
        fail(no, "bad side row, expected 's <u> L|R'");
      sides->emplace_back(u - 1, side[0]);
    } else {
      fail(no, "unknown statement '" + verb + "'");
    }
  }
  if (n < 0) throw FormatError("missing 'p edge' header");
  if (edges_seen != m)
    throw FormatError("header declared " + std::to_string(m) + " edges, found " +
                      std::to_string(edges_seen));
  bool any_label = false;
  for (auto& s : labels)
    if (!s.empty()) any_label = true;
  if (any_label)
    for (int v = 0; v < n; ++v)
      if (labels[static_cast<std::size_t>(v)].empty())
        labels[static_cast<std::size_t>(v)] = std::to_string(v + 1);
  g = Graph(n, any_label ? labels : std::vector<std::string>{});
  if (!any_label)
    for (int v = 0; v < n; ++v) g.set_label(v, std::to_string(v + 1));
  for (auto [no, u, v] : edge_rows) {
    if (u < 1 || v < 1 || u > n || v > n) fail(no, "edge endpoint out of range");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

}  // namespace

Graph read_graph(const std::string& text) {
  Lines lines(text);
  return read_graph_lines(lines, nullptr);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
  for (int v = 0; v < g.n(); ++v)
    if (g.label(v) != std::to_string(v + 1)) out << "l " << (v + 1) << " " << g.label(v) << "\n";
  return out.str();
}

BipartiteGraph read_bipartite(const std::string& text) {
  Lines lines(text);
  std::vector<std::pair<int, char>> sides;
  Graph g = read_graph_lines(lines, &sides);
  if (static_cast<int>(sides.size()) != g.n())
    throw FormatError("bipartite file needs one 's' line per vertex");
  Bits left = 0;
  for (auto [v, side] : sides)
    if (side == 'L') left |= bit(v);
  BipartiteGraph b{std::move(g), left};
  b.validate();
  return b;
}

std::string write_bipartite(const BipartiteGraph& b) {
  std::ostringstream out;
  out << write_graph(b.graph);
  for (int v = 0; v < b.graph.n(); ++v)
    out << "s " << (v + 1) << " " << (has_bit(b.left, v) ? "L" : "R") << "\n";
  return out.str();
}

SetFamily read_family(const std::string& text) {
  Lines lines(text);
  if (lines.rows.empty()) throw FormatError("empty family file");
  auto& [no, head] = lines.rows[0];
  std::istringstream hs(head);
  std::string verb;
  int ground = -1, count = -1;
  if (!(hs >> verb >> ground >> count) || verb != "family" || ground < 0 || count < 0)
    fail(no, "bad 'family <ground> <members>' header");
  if (static_cast<int>(lines.rows.size()) - 1 != count)
    throw FormatError("header declared " + std::to_string(count) + " members, found " +
                      std::to_string(lines.rows.size() - 1));
  SetFamily f;
  f.ground = ground;
  for (std::size_t i = 1; i < lines.rows.size(); ++i) {
    auto& [mno, row] = lines.rows[i];
    std::istringstream ls(row);
    Bits member = 0;
    int x;
    while (ls >> x) {
      if (x < 0 || x >= ground) fail(mno, "member index out of the ground set");
      member |= bit(x);
    }
    if (ls.fail() && !ls.eof()) fail(mno, "unreadable member index");
    f.members.push_back(member);
  }
  f.validate();
  return f;
}

std::string write_family(const SetFamily& f) {
  std::ostringstream out;
  out << "family " << f.ground << " " << f.members.size() << "\n";
  for (Bits m : f.members) {
    bool first = true;
    for_each_bit(m, [&](int x) {
      out << (first ? "" : " ") << x;
      first = false;
    });
    out << "\n";
  }
  return out.str();
}

std::string write_trace(const Trace& t) {
  std::ostringstream out;
  out << "# scheme " << t.scheme << "\n";
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    out << i << " " << t.entries[i].role;
    for (int o : t.entries[i].origin) out << " " << o;
    out << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << content;
}

std::string format_grammar() {
  return
      "poset file:\n"
      "  poset <n>                 # element count, ids 0..n-1\n"
      "  labels <l0> ... <l(n-1)>  # optional display labels\n"
      "  cover <a> <b>             # a < b; shortcut (non-cover) pairs allowed\n"
      "  '#' starts a comment anywhere\n"
      "\n"
      "graph file (DIMACS-like):\n"
      "  p edge <n> <m>\n"
      "  e <u> <v>                 # 1-based endpoints, m lines\n"
      "  l <u> <label>             # optional labels\n"
      "\n"
      "bipartite file: graph file plus one side line per vertex\n"
      "  s <u> L|R\n"
      "\n"
      "family file:\n"
      "  family <ground-size> <member-count>\n"
      "  <i1> <i2> ...             # one member per line, 0-based indices\n"
      "\n"
      "cnf file (DIMACS):\n"
      "  p cnf <vars> <clauses>\n"
      "  <lit> <lit> <lit> 0       # exactly three literals per clause\n"
      "\n"
      "trace sidecar (written next to transform outputs):\n"
      "  # scheme <name>\n"
      "  <output-id> <role> <origin ids...>\n";
}

}  // namespace osdom
