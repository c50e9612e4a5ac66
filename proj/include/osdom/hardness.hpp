#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "osdom/budget.hpp"
#include "osdom/poset.hpp"
#include "osdom/transforms.hpp"

namespace osdom {

/// 3-literal clauses over variables 1..var_count; literals are signed
/// indices, repetition inside a clause allowed.
struct CnfFormula {
  int var_count = 0;
  std::vector<std::array<int, 3>> clauses;

  void validate() const;
};

CnfFormula parse_dimacs_cnf(const std::string& text);

/// EQUAL-3-SAT: as many clauses as variables.
bool validate_equal3sat(const CnfFormula& f);

/// Does every literal (both polarities of every variable) occur? Exactly
/// when this holds the constructed poset lands in P_3(k), the class the
/// reduction theorem speaks about.
bool every_literal_occurs(const CnfFormula& f);

struct ReductionOutput {
  Poset poset;
  int threshold = 0;  // 2n
  Trace trace;
};

/// The height-k poset of the reduction: Max/Min carry one element per
/// literal, each clause contributes n disjoint (k-2)-chains whose tops are
/// covered by the Max elements of the clause's literals and whose bottoms
/// cover the Min elements. |X| = n^2 (k-2) + 4n.
ReductionOutput reduce_to_poset(const CnfFormula& f, int k);

/// Exhaustive assignment check, capped at 20 variables.
bool sat_bruteforce(const CnfFormula& f);

/// A satisfying assignment as a variable bitmask (bit v-1 = variable v),
/// when one exists.
std::optional<Bits> sat_assignment(const CnfFormula& f);

struct SoundnessRow {
  std::string instance;
  bool satisfiable = false;
  int gamma_os = 0;
  int threshold = 0;
  bool in_class = false;  // constructed poset lies in P_3(k)
  bool agree = false;     // satisfiable == (gamma_os <= threshold)
};

/// Compares sat_bruteforce against gamma_os(reduction) <= 2n.
SoundnessRow soundness_check(const CnfFormula& f, int k, Budget* budget = nullptr);

/// All EQUAL-3-SAT formulas with n variables up to the documented
/// canonicalization: clauses are sorted literal triples, the formula a
/// sorted clause multiset, minimized over variable permutations and
/// per-variable polarity flips.
std::vector<CnfFormula> canonical_formulas(int n);

std::string formula_to_string(const CnfFormula& f);

}  // namespace osdom
