// Acceptance suite: one line per criterion, exact tolerances, pinned
// seeds. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>

#include "osdom/verify.hpp"

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const osdom::SuiteReport& report,
               double seconds, double limit_seconds = 0, const std::string& extra = "") {
  bool in_time = limit_seconds <= 0 || seconds <= limit_seconds;
  bool pass = report.ok() && in_time;
  if (!pass) ++failures;
  std::printf("criterion %02d [%-22s] %s  (%d trials, %zu failures, %.1fs%s)%s\n", number,
              label.c_str(), pass ? "PASS" : "FAIL", report.trials, report.failures.size(),
              seconds, in_time ? "" : " OVER TIME", extra.empty() ? "" : ("  " + extra).c_str());
  for (const auto& f : report.failures) {
    std::printf("    detail: %s\n", f.detail.c_str());
    break;  // first failure is enough for the log; the suite report has the rest
  }
  std::fflush(stdout);
}

osdom::SuiteReport timed(const std::string& suite, int trials, std::uint64_t seed,
                         int size, double* seconds) {
  auto start = std::chrono::steady_clock::now();
  osdom::SuiteReport r = osdom::run_suite(suite, trials, seed, size);
  *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

int main() {
  double s = 0;
  std::printf("acceptance: exact tolerances, pinned seeds 2024..2032 (fixed sweeps seed 1)\n");

  // 1. worked-example values reproduce exactly
  criterion(1, "worked-examples", timed("examples", 0, 1, 0, &s), s, 1.0);

  // 2. gamma_os(P3(P_n)) = gamma_os(P3(C_n)) = ceil(2n/3), n = 3..9
  criterion(2, "paths-and-cycles", timed("pncn", 0, 1, 0, &s), s, 30.0);

  // 3. star: gamma_os(P) = gamma(Comp(P*)), >= 200 posets, n <= 12
  criterion(3, "star", timed("star", 200, 2024, 12, &s), s, 300.0);

  // 4. red3: gamma_os(P) = gamma_os(Red3(P)), >= 150 posets of height >= 4
  criterion(4, "red3", timed("red3", 150, 2025, 12, &s), s);

  // 5. roman chain on all connected graphs with <= 6 vertices (exhaustive
  //    up to isomorphism), plus the sandwich bounds
  criterion(5, "roman", timed("roman", 0, 1, 6, &s), s);

  // 6. p4: gamma_os(P4(G)) = 2 gamma(G), gamma_t(B_e(G)) = 2 gamma(G),
  //    gamma_os(B4) = gamma_t(B)
  criterion(6, "p4", timed("p4", 100, 2026, 7, &s), s);

  // 7. bp: bp(B(P)) = gamma_os(P) and the star/double-star restriction
  criterion(7, "bp", timed("bp", 150, 2027, 10, &s), s);

  // 8. helly: equality on complete Helly posets, bounds on Helly posets,
  //    pair reduction vs subset enumeration
  criterion(8, "helly", timed("helly", 200, 2028, 10, &s), s);

  // 9. c6: B_e(G) C6-free iff G is (3-sun,C4,C5,C6)-free; weakly chordal
  //    iff chordal bipartite
  criterion(9, "c6", timed("c6", 500, 2029, 7, &s), s);

  // 10. hardness: exhaustive canonical EQUAL-3-SAT sweep, n <= 3, k in
  //     {4,5}; counts asserted everywhere, the satisfiability equivalence
  //     on the theorem's class (every literal occurring); out-of-class
  //     instances reported in the notes
  {
    osdom::SuiteReport r = timed("hardness", 0, 1, 0, &s);
    std::string tail;
    for (const std::string& n : r.notes)
      if (n.find("out-of-class") != std::string::npos) tail = n;
    criterion(10, "hardness", r, s, 600.0, tail);
  }

  // 11. product: gamma_os(BxK2) >= gamma_t(B) >= gamma(B), MD(BxK2) ~ B
  criterion(11, "product", timed("product", 100, 2031, 10, &s), s);

  // 12. universal bound gamma_os <= ceil((n-1)/2) on generated class posets
  criterion(12, "bound", timed("bound", 200, 2032, 12, &s), s);

  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures);
  return failures;
}
