#pragma once

#include <vector>

#include "osdom/budget.hpp"
#include "osdom/graph.hpp"
#include "osdom/hitting.hpp"
#include "osdom/poset.hpp"

namespace osdom {

enum class Method { branch_and_bound, enumeration };
enum class DominationVariant { plain, total };
enum class RomanMethod { direct, two_packing_formula };
enum class OsMethod { direct, via_star };
enum class BpMode { general, star_double_star };

/// Value plus certificate. Exactly one witness field is populated per
/// parameter: vertex_set for the domination family and theta/vdt (vdt uses
/// parts), levels for Roman functions, parts for clique/biclique families.
/// Every solver re-checks its witness against the definitional predicate
/// before returning.
struct SolveResult {
  int value = 0;
  Method method = Method::branch_and_bound;
  std::vector<int> vertex_set;
  std::vector<int> levels;
  std::vector<std::vector<int>> parts;
};

bool is_dominating(const Graph& g, Bits d);
bool is_total_dominating(const Graph& g, Bits d);

/// Dominating set of Comp(P) where every mid element is in D or strictly
/// between two members of D.
bool is_os_dominating(const Poset& p, Bits d);

/// gamma / gamma_t. Witness is the lexicographically least optimum.
SolveResult domination(const Graph& g, DominationVariant variant,
                       Method method = Method::branch_and_bound,
                       Budget* budget = nullptr);

/// gamma_R. direct searches functions V -> {0,1,2}; two_packing_formula
/// evaluates min{|S| + 2 gamma(G-S) : S a 2-packing} (equal to gamma_R on
/// connected graphs of order >= 2).
SolveResult roman_domination(const Graph& g, RomanMethod rm,
                             Method method = Method::branch_and_bound,
                             Budget* budget = nullptr);

/// min{|A| + 2 gamma(G-A) : A subseteq V}.
SolveResult theta(const Graph& g, Budget* budget = nullptr);

/// gamma_os. via_star computes gamma(Comp(P*)) and requires P in P_3(k).
SolveResult os_domination(const Poset& p, OsMethod om = OsMethod::direct,
                          Method method = Method::branch_and_bound,
                          Budget* budget = nullptr);

/// bp(B) through biclique vertex-covers (cover and partition optima
/// coincide). star_double_star restricts candidates to the bicliques B_x
/// indexed by elements of the generating poset and needs that poset.
SolveResult biclique_partition(const BipartiteGraph& b,
                               BpMode mode = BpMode::general,
                               const Poset* origin = nullptr,
                               Method method = Method::branch_and_bound,
                               Budget* budget = nullptr);

/// we(G): clique partition minimizing #singletons + 2 #(larger cliques).
SolveResult weighted_clique_partition(const Graph& g,
                                      Method method = Method::branch_and_bound,
                                      Budget* budget = nullptr);

/// vdt(G): maximum vertex-disjoint triangle packing.
SolveResult vertex_disjoint_triangles(const Graph& g,
                                      Method method = Method::branch_and_bound,
                                      Budget* budget = nullptr);

/// chi(G), capped (default 24 vertices for the pruned search, 8 for the
/// flat enumeration oracle).
SolveResult chromatic_number(const Graph& g,
                             Method method = Method::branch_and_bound,
                             Budget* budget = nullptr, int size_cap = 24);

/// The hitting-set instance behind gamma_os; exposed for the tests that
/// cross-check the reduction against the definitional predicate.
HittingInstance os_domination_instance(const Poset& p);

}  // namespace osdom
