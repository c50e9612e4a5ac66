#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "osdom/budget.hpp"
#include "osdom/graph.hpp"
#include "osdom/poset.hpp"

namespace osdom {

/// Deterministic stream: raw mt19937_64 words with modulo draws, no
/// stdlib distributions, so replays agree across platforms.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next() { return eng(); }
  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int num, int den) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(den)) < num;
  }
};

/// Random layered DAG, rejection-filtered into P_l(k).
Poset random_poset_in_class(Rng& rng, int l, int k, int size_max);

/// Random DAG poset of any shape (ids already topologically ordered).
Poset random_poset(Rng& rng, int size_max);

Graph random_connected_graph(Rng& rng, int size_max, int min_n = 2);
Graph random_tree(Rng& rng, int size_max);
BipartiteGraph random_bipartite_no_isolated(Rng& rng, int size_max, bool connected);

/// Every connected graph on 1..max_n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs_up_to_iso(int max_n);

struct Failure {
  std::string instance;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  std::uint64_t seed = 0;
  bool theorem_suite = true;  // a failure is an implementation bug, never a refutation
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

/// Registered suites; trials/size_max <= 0 pick the suite's pinned
/// defaults. UnknownSuite for unregistered names.
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed,
                      int size_max, Budget* budget = nullptr);

std::vector<std::string> suite_names();

/// key=value lines for the machine-readable summary file.
std::string summary_keyvals(const SuiteReport& report);

std::string render_report(const SuiteReport& report, int max_failures = 5);

// Worked-example posets and graphs, shared by the suites, the tests and
// the bundled data files (data/fig*).
Poset twin_poset_p();
Poset twin_poset_r();
Poset star_demo_poset();
Poset reduction_demo_poset();
BipartiteGraph total_demo_bipartite();
Poset bp_gap_poset();
Poset selfdual_helly_poset();
Poset noncomplete_helly_poset();

}  // namespace osdom
