// osdom: exact order-sensitive domination toolkit.
//
// Verbs: compute, graph, transform, helly, reduce-sat, verify, formats.
// Exit codes: 0 success, 1 computation error (prints the error kind),
// 2 usage error.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "osdom/hardness.hpp"
#include "osdom/helly.hpp"
#include "osdom/io.hpp"
#include "osdom/recognizers.hpp"
#include "osdom/solvers.hpp"
#include "osdom/transforms.hpp"
#include "osdom/verify.hpp"

namespace {

using namespace osdom;

std::string label_list(const std::vector<int>& ids, const std::vector<std::string>& labels) {
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (int i : ids) names.push_back(labels[static_cast<std::size_t>(i)]);
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + "}";
}

void print_parts(const SolveResult& r, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < r.parts.size(); ++i)
    std::cout << "part " << (i + 1) << " = " << label_list(r.parts[i], labels) << "\n";
}

Method parse_method(const std::string& s) {
  if (s == "bnb" || s == "branch_and_bound") return Method::branch_and_bound;
  if (s == "enum" || s == "enumeration") return Method::enumeration;
  throw ParamError("unknown method '" + s + "'");
}

int run_compute(const std::string& poset_path, const std::string& method,
                const std::string& os_method) {
  Poset p = read_poset(read_text_file(poset_path));
  OsMethod om = os_method == "via_star" ? OsMethod::via_star : OsMethod::direct;
  if (os_method != "via_star" && os_method != "direct")
    throw ParamError("unknown os method '" + os_method + "'");
  SolveResult r = os_domination(p, om, parse_method(method));
  std::cout << "gamma_os = " << r.value << "\n";
  std::cout << "witness = " << label_list(r.vertex_set, p.labels()) << "\n";
  return 0;
}

int run_graph_op(const std::string& op, const std::string& graph_path,
                 const std::string& bip_path, const std::string& method,
                 const std::string& family, const std::string& poset_path) {
  Method m = parse_method(method);
  if (op == "bp" || op == "bp-stars") {
    BipartiteGraph b = read_bipartite(read_text_file(bip_path));
    SolveResult r;
    if (op == "bp-stars") {
      Poset origin = read_poset(read_text_file(poset_path));
      r = biclique_partition(b, BpMode::star_double_star, &origin, m);
    } else {
      r = biclique_partition(b, BpMode::general, nullptr, m);
    }
    std::cout << "bp = " << r.value << "\n";
    print_parts(r, b.graph.labels());
    return 0;
  }
  Graph g = graph_path.empty() && !bip_path.empty()
                ? read_bipartite(read_text_file(bip_path)).graph
                : read_graph(read_text_file(graph_path));
  if (op == "gamma" || op == "gamma_t") {
    SolveResult r = domination(g, op == "gamma" ? DominationVariant::plain : DominationVariant::total, m);
    std::cout << op << " = " << r.value << "\n";
    std::cout << "witness = " << label_list(r.vertex_set, g.labels()) << "\n";
  } else if (op == "roman" || op == "roman-2packing") {
    SolveResult r = roman_domination(
        g, op == "roman" ? RomanMethod::direct : RomanMethod::two_packing_formula, m);
    std::cout << "gamma_R = " << r.value << "\n";
    if (op == "roman") {
      std::vector<int> ones, twos;
      for (int v = 0; v < g.n(); ++v) {
        if (r.levels[static_cast<std::size_t>(v)] == 1) ones.push_back(v);
        if (r.levels[static_cast<std::size_t>(v)] == 2) twos.push_back(v);
      }
      std::cout << "f=2 on " << label_list(twos, g.labels()) << "\n";
      std::cout << "f=1 on " << label_list(ones, g.labels()) << "\n";
    } else {
      std::cout << "packing = " << label_list(r.vertex_set, g.labels()) << "\n";
    }
  } else if (op == "theta") {
    SolveResult r = theta(g);
    std::cout << "theta = " << r.value << "\n";
    std::cout << "A = " << label_list(r.vertex_set, g.labels()) << "\n";
  } else if (op == "we") {
    SolveResult r = weighted_clique_partition(g, m);
    std::cout << "we = " << r.value << "\n";
    print_parts(r, g.labels());
  } else if (op == "vdt") {
    SolveResult r = vertex_disjoint_triangles(g, m);
    std::cout << "vdt = " << r.value << "\n";
    print_parts(r, g.labels());
  } else if (op == "chi") {
    SolveResult r = chromatic_number(g, m);
    std::cout << "chi = " << r.value << "\n";
  } else if (op == "free") {
    Pattern pat;
    if (family == "c4") pat = Pattern::c4;
    else if (family == "c5") pat = Pattern::c5;
    else if (family == "c6") pat = Pattern::c6;
    else if (family == "three_sun") pat = Pattern::three_sun;
    else if (family == "weakly_chordal") pat = Pattern::weakly_chordal;
    else if (family == "chordal_bipartite") pat = Pattern::chordal_bipartite;
    else throw ParamError("unknown family '" + family + "'");
    PatternReport rep = forbidden_subgraph_free(g, pat);
    std::cout << family << "-free = " << (rep.free ? "yes" : "no") << "\n";
    if (!rep.free) std::cout << "witness = " << label_list(rep.witness, g.labels()) << "\n";
  } else {
    throw ParamError("unknown graph op '" + op + "'");
  }
  return 0;
}

int run_transform(const std::string& op, const std::string& poset_path,
                  const std::string& graph_path, const std::string& bip_path,
                  const std::string& family_path, int k, const std::string& out,
                  const std::string& trace_path) {
  auto emit_poset = [&](const Transformed& t) {
    write_text_file(out, write_poset(t.poset));
    if (!trace_path.empty()) write_text_file(trace_path, write_trace(t.trace));
    std::cout << "wrote poset with " << t.poset.n() << " elements to " << out << "\n";
  };
  auto emit_graph = [&](const TransformedGraph& t) {
    write_text_file(out, write_graph(t.graph));
    if (!trace_path.empty()) write_text_file(trace_path, write_trace(t.trace));
    std::cout << "wrote graph with " << t.graph.n() << " vertices to " << out << "\n";
  };
  if (op == "star" || op == "red3" || op == "maxmin" || op == "dual" || op == "md" ||
      op == "comp" || op == "bipartite" || op == "hu" || op == "hd") {
    Poset p = read_poset(read_text_file(poset_path));
    if (op == "star") emit_poset(star_extension(p));
    else if (op == "red3") emit_poset(red3(p));
    else if (op == "maxmin") emit_poset(maxmin_closure(p));
    else if (op == "dual") {
      write_text_file(out, write_poset(p.dual()));
      std::cout << "wrote poset with " << p.n() << " elements to " << out << "\n";
    } else if (op == "md") emit_graph(middle_graph(p));
    else if (op == "comp") {
      write_text_file(out, write_graph(p.comparability_graph()));
      std::cout << "wrote graph with " << p.n() << " vertices to " << out << "\n";
    } else if (op == "hu" || op == "hd") {
      auto [hu, hd] = hu_hd(p);
      emit_graph(op == "hu" ? hu : hd);
    } else {
      TransformedBipartite t = bipartite_transformation(p);
      write_text_file(out, write_bipartite(t.bipartite));
      if (!trace_path.empty()) write_text_file(trace_path, write_trace(t.trace));
      std::cout << "wrote bipartite graph with " << t.bipartite.graph.n() << " vertices to "
                << out << "\n";
    }
    return 0;
  }
  if (op == "pk") {
    Graph g = read_graph(read_text_file(graph_path));
    emit_poset(graded_poset(g, k));
    return 0;
  }
  if (op == "square" || op == "bext") {
    Graph g = read_graph(read_text_file(graph_path));
    if (op == "square") {
      write_text_file(out, write_graph(square(g)));
      std::cout << "wrote graph with " << g.n() << " vertices to " << out << "\n";
    } else {
      BipartiteGraph b = extended_double_cover(g);
      write_text_file(out, write_bipartite(b));
      std::cout << "wrote bipartite graph with " << b.graph.n() << " vertices to " << out << "\n";
    }
    return 0;
  }
  if (op == "b4") {
    BipartiteGraph b = read_bipartite(read_text_file(bip_path));
    emit_poset(bipartite_to_b4(b));
    return 0;
  }
  if (op == "family") {
    SetFamily f = read_family(read_text_file(family_path));
    emit_poset(family_poset(f));
    return 0;
  }
  throw ParamError("unknown transform op '" + op + "'");
}

int run_helly(const std::string& poset_path, const std::string& family_path) {
  if (!family_path.empty()) {
    SetFamily f = read_family(read_text_file(family_path));
    std::cout << "intersecting = " << (is_intersecting(f) ? "yes" : "no") << "\n";
    HellyReport h = has_helly_property(f);
    std::cout << "helly = " << (h.holds ? "yes" : "no") << "\n";
    if (!h.holds) {
      std::cout << "violating members =";
      for (int i : h.witness) std::cout << " " << i;
      std::cout << "\n";
    }
    return 0;
  }
  Poset p = read_poset(read_text_file(poset_path));
  PosetHellyReport h = is_helly_poset(p);
  std::cout << "helly = " << (h.holds ? "yes" : "no") << "\n";
  if (!h.holds) {
    std::cout << "violating " << (h.up_side ? "up" : "down") << "-family mids = "
              << label_list(h.witness, p.labels()) << "\n";
    return 0;
  }
  CompleteHellyReport c = is_complete_helly_poset(p);
  std::cout << "complete_helly = " << (c.holds ? "yes" : "no") << "\n";
  if (!c.holds)
    std::cout << "disagreeing mid pair = " << label_list(c.witness, p.labels()) << "\n";
  std::cout << "c6_sufficient(hu_hd) = "
            << (c6_sufficient_check(p, C6Level::hu_hd) ? "yes" : "no") << "\n";
  return 0;
}

int run_reduce_sat(const std::string& cnf_path, int k, const std::string& out,
                   const std::string& trace_path, bool check) {
  CnfFormula f = parse_dimacs_cnf(read_text_file(cnf_path));
  ReductionOutput red = reduce_to_poset(f, k);
  write_text_file(out, write_poset(red.poset));
  if (!trace_path.empty()) write_text_file(trace_path, write_trace(red.trace));
  std::cout << "wrote poset with " << red.poset.n() << " elements to " << out << "\n";
  std::cout << "threshold = " << red.threshold << "\n";
  if (check) {
    SoundnessRow row = soundness_check(f, k);
    std::cout << "instance, sat, gamma_os, threshold, verdict\n";
    std::cout << row.instance << ", " << (row.satisfiable ? "sat" : "unsat") << ", "
              << row.gamma_os << ", " << row.threshold << ", "
              << (row.in_class ? (row.agree ? "agree" : "MISMATCH") : "out-of-class") << "\n";
    if (row.in_class && !row.agree) return 1;
  }
  return 0;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, int size_max,
               const std::string& summary_path) {
  SuiteReport report = run_suite(suite, trials, seed, size_max);
  std::cout << render_report(report);
  std::string summary = summary_path.empty() ? suite + ".summary" : summary_path;
  write_text_file(summary, summary_keyvals(report));
  std::cout << "summary written to " << summary << "\n";
  return report.theorem_suite && !report.ok() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact order-sensitive domination toolkit"};
  app.require_subcommand(1);

  std::string poset_path, graph_path, bip_path, family_path, cnf_path;
  std::string out = "out.txt", trace_path;
  std::string method = "bnb", os_method = "direct", op, family = "c6";
  std::string suite, summary_path;
  int k = 3;
  int trials = 0, size_max = 0;
  std::uint64_t seed = 0;
  bool seed_set = false, check = false;

  auto* compute = app.add_subcommand("compute", "gamma_os of a poset file");
  compute->add_option("--poset", poset_path, "poset file")->required();
  compute->add_option("--method", method, "bnb|enum");
  compute->add_option("--os-method", os_method, "direct|via_star");

  auto* graph = app.add_subcommand("graph", "graph parameters and recognizers");
  graph->add_option("--op", op,
                    "gamma|gamma_t|roman|roman-2packing|theta|we|vdt|chi|free|bp|bp-stars")
      ->required();
  graph->add_option("--graph", graph_path, "graph file");
  graph->add_option("--bipartite", bip_path, "bipartite file (bp ops)");
  graph->add_option("--poset", poset_path, "generating poset (bp-stars)");
  graph->add_option("--method", method, "bnb|enum");
  graph->add_option("--family", family,
                    "c4|c5|c6|three_sun|weakly_chordal|chordal_bipartite (free op)");

  auto* transform = app.add_subcommand("transform", "poset and graph constructions, written to files");
  transform->add_option("--op", op,
                        "star|red3|maxmin|dual|pk|b4|bipartite|md|hu|hd|comp|square|bext|family")
      ->required();
  transform->add_option("--poset", poset_path, "poset input");
  transform->add_option("--graph", graph_path, "graph input");
  transform->add_option("--bipartite", bip_path, "bipartite input");
  transform->add_option("--family", family_path, "family input");
  transform->add_option("--k", k, "layer count for pk");
  transform->add_option("--out", out, "output file")->required();
  transform->add_option("--trace", trace_path, "sidecar trace file");

  auto* helly = app.add_subcommand("helly", "Helly property checks");
  helly->add_option("--poset", poset_path, "poset file");
  helly->add_option("--family", family_path, "family file");

  auto* reduce = app.add_subcommand("reduce-sat", "EQUAL-3-SAT reduction");
  reduce->add_option("--cnf", cnf_path, "DIMACS cnf file")->required();
  reduce->add_option("--k", k, "target height (>= 4)")->required();
  reduce->add_option("--out", out, "poset output file")->required();
  reduce->add_option("--trace", trace_path, "sidecar trace file");
  reduce->add_flag("--check", check, "run the soundness report (brute-forces both sides)");

  auto* verify = app.add_subcommand("verify", "theorem suites and conjecture searches");
  verify->add_option("--suite", suite, "suite name (see --list)")->required();
  verify->add_option("--trials", trials, "trial count (0 = suite default)");
  verify->add_option("--seed", seed, "rng seed")->required();
  verify->add_option("--size-max", size_max, "instance size bound (0 = suite default)");
  verify->add_option("--summary", summary_path, "summary file (default <suite>.summary)");

  auto* formats = app.add_subcommand("formats", "print the grammar of every file format");
  auto* suites = app.add_subcommand("suites", "list registered suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  (void)seed_set;

  try {
    if (*compute) return run_compute(poset_path, method, os_method);
    if (*graph) return run_graph_op(op, graph_path, bip_path, method, family, poset_path);
    if (*transform)
      return run_transform(op, poset_path, graph_path, bip_path, family_path, k, out, trace_path);
    if (*helly) return run_helly(poset_path, family_path);
    if (*reduce) return run_reduce_sat(cnf_path, k, out, trace_path, check);
    if (*verify) return run_verify(suite, trials, seed, size_max, summary_path);
    if (*formats) {
      std::cout << osdom::format_grammar();
      return 0;
    }
    if (*suites) {
      for (const std::string& name : suite_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const osdom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
