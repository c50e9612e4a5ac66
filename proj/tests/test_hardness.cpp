#include "doctest.h"
#include "osdom/hardness.hpp"
#include "osdom/solvers.hpp"
#include "osdom/verify.hpp"

using namespace osdom;

TEST_CASE("dimacs parsing") {
  CnfFormula f = parse_dimacs_cnf("p cnf 1 1\n1 1 1 0\n");
  CHECK(f.var_count == 1);
  CHECK(f.clauses.size() == 1);
  CHECK(f.clauses[0] == std::array<int, 3>{1, 1, 1});

  CnfFormula g = parse_dimacs_cnf("c comment\np cnf 2 1\n1 -2 2 0\n");
  CHECK(g.clauses[0] == std::array<int, 3>{1, -2, 2});

  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 1\n1 1 0\n"), ArityError);
  CHECK_THROWS_AS(parse_dimacs_cnf("1 1 1 0\n"), FormatError);
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 2\n1 1 1 0\n"), FormatError);
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 1\n1 1 2 0\n"), IndexError);
}

TEST_CASE("equal-3-sat validation") {
  CnfFormula f;
  f.var_count = 1;
  f.clauses = {{1, 1, 1}};
  CHECK(validate_equal3sat(f));
  f.var_count = 2;
  CHECK(!validate_equal3sat(f));
  f.var_count = 3;
  f.clauses = {{1, 1, 1}, {-1, -1, -1}, {2, 2, 3}};
  CHECK(validate_equal3sat(f));
}

TEST_CASE("sat brute force") {
  CnfFormula f;
  f.var_count = 1;
  f.clauses = {{1, 1, 1}};
  CHECK(sat_bruteforce(f));
  CnfFormula g;
  g.var_count = 3;
  g.clauses = {{1, 1, 1}, {-1, -1, -1}, {2, 2, 3}};
  CHECK(!sat_bruteforce(g));
  CnfFormula empty;
  CHECK(sat_bruteforce(empty));
}

TEST_CASE("reduction counts and structure") {
  CnfFormula f;
  f.var_count = 1;
  f.clauses = {{1, 1, 1}};
  ReductionOutput r4 = reduce_to_poset(f, 4);
  CHECK(r4.poset.n() == 6);  // 1*2 + 4
  CHECK(r4.threshold == 2);
  CHECK(r4.trace.entries.size() == 6);

  CnfFormula g;
  g.var_count = 3;
  g.clauses = {{1, 1, 1}, {-1, -1, -1}, {2, 2, 3}};
  CHECK(reduce_to_poset(g, 5).poset.n() == 39);  // 9*3 + 12

  CHECK_THROWS_AS(reduce_to_poset(f, 3), ParamError);
  CnfFormula unbalanced;
  unbalanced.var_count = 2;
  unbalanced.clauses = {{1, -2, 2}};
  CHECK_THROWS_AS(reduce_to_poset(unbalanced, 4), ValidationError);
}

TEST_CASE("literal-complete reductions land in the class") {
  CnfFormula f;
  f.var_count = 1;
  f.clauses = {{1, -1, 1}};
  CHECK(every_literal_occurs(f));
  for (int k : {4, 5, 6}) {
    ReductionOutput r = reduce_to_poset(f, k);
    CHECK(r.poset.in_class(3, k));
    CHECK(bit_count(r.poset.max_set()) == 2);
    CHECK(bit_count(r.poset.min_set()) == 2);
  }

  CnfFormula pure;
  pure.var_count = 1;
  pure.clauses = {{1, 1, 1}};
  CHECK(!every_literal_occurs(pure));
  CHECK(!reduce_to_poset(pure, 4).poset.in_class(3, 4));
}

TEST_CASE("soundness on small instances") {
  CnfFormula mixed;
  mixed.var_count = 1;
  mixed.clauses = {{1, -1, 1}};
  SoundnessRow row = soundness_check(mixed, 4);
  CHECK(row.in_class);
  CHECK(row.satisfiable);
  CHECK(row.gamma_os == 2);
  CHECK(row.agree);

  // the pure-positive formula leaves the class: a'1 and b'1 are isolated,
  // the budget cannot absorb them and the equivalence does not apply
  CnfFormula pure;
  pure.var_count = 1;
  pure.clauses = {{1, 1, 1}};
  SoundnessRow out = soundness_check(pure, 4);
  CHECK(!out.in_class);
  CHECK(out.satisfiable);
  CHECK(out.gamma_os == 4);
  CHECK(!out.agree);

  CnfFormula unsat;
  unsat.var_count = 3;
  unsat.clauses = {{1, 1, 1}, {-1, -1, -1}, {2, 2, 3}};
  SoundnessRow u = soundness_check(unsat, 4);
  CHECK(!u.satisfiable);
  CHECK(u.gamma_os > u.threshold);
  CHECK(u.agree);  // the unsat side still agrees even out of class
}

TEST_CASE("exhaustive n=1 sweep") {
  std::vector<CnfFormula> formulas = canonical_formulas(1);
  CHECK(formulas.size() == 2);  // one pure orbit, one mixed orbit
  for (const CnfFormula& f : formulas) {
    CHECK(sat_bruteforce(f));  // single-clause formulas are always satisfiable
    for (int k : {4, 5}) {
      SoundnessRow row = soundness_check(f, k);
      if (row.in_class) CHECK(row.agree);
    }
  }
}

TEST_CASE("canonical sweep is closed under the symmetry group") {
  std::vector<CnfFormula> formulas = canonical_formulas(2);
  CHECK(formulas.size() == 37);
  // spot check: flipping every literal of a canonical formula lands on a
  // formula with the same satisfiability and the same reduction size
  for (const CnfFormula& f : formulas) {
    CnfFormula flipped = f;
    for (auto& c : flipped.clauses)
      for (int& lit : c) lit = -lit;
    CHECK(sat_bruteforce(f) == sat_bruteforce(flipped));
    CHECK(reduce_to_poset(f, 4).poset.n() == reduce_to_poset(flipped, 4).poset.n());
  }
}

TEST_CASE("constructive witness from a satisfying assignment") {
  CnfFormula f;
  f.var_count = 2;
  f.clauses = {{1, -2, 2}, {-1, 1, 2}};
  CHECK(every_literal_occurs(f));
  ReductionOutput red = reduce_to_poset(f, 4);
  Bits assign = *sat_assignment(f);
  Bits witness = 0;
  for (int i = 0; i < f.var_count; ++i) {
    for (int lit : f.clauses[static_cast<std::size_t>(i)]) {
      int var = lit > 0 ? lit : -lit;
      bool value = has_bit(assign, var - 1);
      if (lit < 0) value = !value;
      if (value) {
        witness |= bit(2 * (var - 1) + (lit > 0 ? 0 : 1));
        witness |= bit(2 * f.var_count + 2 * (var - 1) + (lit > 0 ? 0 : 1));
        break;
      }
    }
  }
  CHECK(is_os_dominating(red.poset, witness));
  CHECK(bit_count(witness) <= red.threshold);
}
