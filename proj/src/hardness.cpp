#include "osdom/hardness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "osdom/solvers.hpp"

namespace osdom {

void CnfFormula::validate() const {
  if (var_count < 0) throw ParamError("negative variable count");
  for (const auto& c : clauses)
    for (int lit : c) {
      if (lit == 0) throw FormatError("zero literal inside a clause");
      int v = lit > 0 ? lit : -lit;
      if (v > var_count) throw IndexError("literal references variable " + std::to_string(v) +
                                          " beyond the declared count");
    }
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  bool header = false;
  int expected_clauses = 0;
  std::vector<int> pending;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, kind;
      if (!(ls >> p >> kind >> f.var_count >> expected_clauses) || kind != "cnf")
        throw FormatError("bad DIMACS header at line " + std::to_string(line_no));
      header = true;
      continue;
    }
    if (!header) throw FormatError("clause before the 'p cnf' header at line " + std::to_string(line_no));
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw ArityError("clause with " + std::to_string(pending.size()) +
                           " literals at line " + std::to_string(line_no) + "; exactly 3 required");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (ls.fail() && !ls.eof())
      throw FormatError("unreadable literal at line " + std::to_string(line_no));
  }
  if (!header) throw FormatError("missing 'p cnf' header");
  if (!pending.empty()) throw FormatError("unterminated clause at end of input");
  if (static_cast<int>(f.clauses.size()) != expected_clauses)
    throw FormatError("header declared " + std::to_string(expected_clauses) + " clauses, found " +
                      std::to_string(f.clauses.size()));
  f.validate();
  return f;
}

bool validate_equal3sat(const CnfFormula& f) {
  return static_cast<int>(f.clauses.size()) == f.var_count;
}

bool every_literal_occurs(const CnfFormula& f) {
  std::vector<bool> pos(static_cast<std::size_t>(f.var_count) + 1, false);
  std::vector<bool> neg(static_cast<std::size_t>(f.var_count) + 1, false);
  for (const auto& c : f.clauses)
    for (int lit : c) (lit > 0 ? pos : neg)[static_cast<std::size_t>(std::abs(lit))] = true;
  for (int v = 1; v <= f.var_count; ++v)
    if (!pos[static_cast<std::size_t>(v)] || !neg[static_cast<std::size_t>(v)]) return false;
  return true;
}

ReductionOutput reduce_to_poset(const CnfFormula& f, int k) {
  f.validate();
  if (k < 4) throw ParamError("the reduction needs k >= 4");
  if (!validate_equal3sat(f))
    throw ValidationError("formula is not EQUAL-3-SAT (clause count != variable count)");
  int n = f.var_count;
  long long total = static_cast<long long>(n) * n * (k - 2) + 4LL * n;
  if (total > kMaxUniverse)
    throw SizeCapError("reduction would have " + std::to_string(total) + " elements");

  // ids: a_v, a'_v alternate over 0..2n-1, then b_v, b'_v, then the chains
  // clause-major: chain (i, p) occupies 4n + ((i-1)n + (p-1))(k-2) ...
  auto max_id = [](int var, bool positive) { return 2 * (var - 1) + (positive ? 0 : 1); };
  auto min_id = [n](int var, bool positive) { return 2 * n + 2 * (var - 1) + (positive ? 0 : 1); };
  auto chain_id = [n, k](int i, int p, int l) {
    return 4 * n + ((i - 1) * n + (p - 1)) * (k - 2) + (l - 1);
  };

  std::vector<std::string> labels(static_cast<std::size_t>(total));
  Trace trace;
  trace.scheme = "equal3sat_reduction";
  trace.entries.resize(static_cast<std::size_t>(total));
  for (int v = 1; v <= n; ++v) {
    labels[static_cast<std::size_t>(max_id(v, true))] = "a" + std::to_string(v);
    labels[static_cast<std::size_t>(max_id(v, false))] = "a'" + std::to_string(v);
    labels[static_cast<std::size_t>(min_id(v, true))] = "b" + std::to_string(v);
    labels[static_cast<std::size_t>(min_id(v, false))] = "b'" + std::to_string(v);
    trace.entries[static_cast<std::size_t>(max_id(v, true))] = {"max_pos", {v}};
    trace.entries[static_cast<std::size_t>(max_id(v, false))] = {"max_neg", {v}};
    trace.entries[static_cast<std::size_t>(min_id(v, true))] = {"min_pos", {v}};
    trace.entries[static_cast<std::size_t>(min_id(v, false))] = {"min_neg", {v}};
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= n; ++p) {
      for (int l = 1; l <= k - 2; ++l) {
        int id = chain_id(i, p, l);
        labels[static_cast<std::size_t>(id)] =
            "c^" + std::to_string(l) + "_" + std::to_string(i) + "," + std::to_string(p);
        trace.entries[static_cast<std::size_t>(id)] = {"chain", {i, p, l}};
        if (l > 1) pairs.emplace_back(chain_id(i, p, l - 1), id);
      }
      for (int lit : f.clauses[static_cast<std::size_t>(i - 1)]) {
        int var = std::abs(lit);
        bool positive = lit > 0;
        pairs.emplace_back(chain_id(i, p, k - 2), max_id(var, positive));
        pairs.emplace_back(min_id(var, positive), chain_id(i, p, 1));
      }
    }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  ReductionOutput out{Poset::build(static_cast<int>(total), pairs, std::move(labels)), 2 * n,
                      std::move(trace)};
  return out;
}

std::optional<Bits> sat_assignment(const CnfFormula& f) {
  f.validate();
  if (f.var_count > 20) throw SizeCapError("sat_bruteforce capped at 20 variables");
  for (Bits assign = 0; assign < (Bits{1} << f.var_count); ++assign) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (int lit : c) {
        bool value = has_bit(assign, std::abs(lit) - 1);
        if (lit > 0 ? value : !value) sat = true;
      }
      if (!sat) { all = false; break; }
    }
    if (all) return assign;
    if (f.var_count == 0) break;
  }
  return std::nullopt;
}

bool sat_bruteforce(const CnfFormula& f) { return sat_assignment(f).has_value(); }

SoundnessRow soundness_check(const CnfFormula& f, int k, Budget* budget) {
  ReductionOutput red = reduce_to_poset(f, k);
  SoundnessRow row;
  row.instance = formula_to_string(f);
  row.satisfiable = sat_bruteforce(f);
  row.threshold = red.threshold;
  row.in_class = red.poset.in_class(3, k);
  row.gamma_os = os_domination(red.poset, OsMethod::direct, Method::branch_and_bound, budget).value;
  row.agree = row.satisfiable == (row.gamma_os <= row.threshold);
  return row;
}

namespace {

using Clause = std::array<int, 3>;

Clause sort_clause(Clause c) {
  auto key = [](int lit) { return std::abs(lit) * 2 + (lit < 0 ? 1 : 0); };
  std::sort(c.begin(), c.end(), [&](int a, int b) { return key(a) < key(b); });
  return c;
}

std::vector<Clause> canonical_image(const std::vector<Clause>& clauses,
                                    const std::vector<int>& perm, unsigned flips) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const Clause& c : clauses) {
    Clause d;
    for (int t = 0; t < 3; ++t) {
      int var = std::abs(c[static_cast<std::size_t>(t)]);
      int mapped = perm[static_cast<std::size_t>(var - 1)] + 1;
      bool positive = c[static_cast<std::size_t>(t)] > 0;
      if ((flips >> (var - 1)) & 1u) positive = !positive;
      d[static_cast<std::size_t>(t)] = positive ? mapped : -mapped;
    }
    out.push_back(sort_clause(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CnfFormula> canonical_formulas(int n) {
  if (n < 1 || n > 3) throw ParamError("canonical sweep implemented for 1 <= n <= 3");
  // all sorted clauses over 2n literals
  std::vector<Clause> atoms;
  std::vector<int> lits;
  for (int v = 1; v <= n; ++v) {
    lits.push_back(v);
    lits.push_back(-v);
  }
  for (std::size_t a = 0; a < lits.size(); ++a)
    for (std::size_t b = a; b < lits.size(); ++b)
      for (std::size_t c = b; c < lits.size(); ++c)
        atoms.push_back(sort_clause({lits[a], lits[b], lits[c]}));
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  std::vector<std::vector<int>> perms;
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
  do { perms.push_back(base); } while (std::next_permutation(base.begin(), base.end()));

  std::set<std::vector<Clause>> seen;
  std::vector<CnfFormula> out;
  // multisets of n clauses via nondecreasing atom indices
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Clause> formula;
    formula.reserve(static_cast<std::size_t>(n));
    for (int i : pick) formula.push_back(atoms[static_cast<std::size_t>(i)]);
    std::sort(formula.begin(), formula.end());
    std::vector<Clause> best = formula;
    for (const auto& perm : perms)
      for (unsigned flips = 0; flips < (1u << n); ++flips) {
        auto img = canonical_image(formula, perm, flips);
        if (img < best) best = img;
      }
    if (seen.insert(best).second) {
      CnfFormula f;
      f.var_count = n;
      f.clauses = best;
      out.push_back(std::move(f));
    }
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(atoms.size()) - 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string formula_to_string(const CnfFormula& f) {
  std::string s = "n=" + std::to_string(f.var_count);
  for (const auto& c : f.clauses) {
    s += " (";
    for (int t = 0; t < 3; ++t) {
      if (t) s += ",";
      s += std::to_string(c[static_cast<std::size_t>(t)]);
    }
    s += ")";
  }
  return s;
}

}  // namespace osdom
