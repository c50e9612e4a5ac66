// End-to-end CLI checks: runs the osdom binary against the bundled data
// files and greps its output. argv[1] = binary path, argv[2] = data dir.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
std::string bin, data, tmpdir;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// returns the exit status, captures stdout+stderr
int run(const std::string& args, std::string* output) {
  std::string log = tmpdir + "/out.log";
  std::string cmd = bin + " " + args + " > " + log + " 2>&1";
  int rc = std::system(cmd.c_str());
  *output = slurp(log);
  return WEXITSTATUS(rc);
}

void expect(bool ok, const std::string& what, const std::string& output) {
  if (!ok) {
    ++failures;
    std::printf("FAIL: %s\n--- output ---\n%s\n", what.c_str(), output.c_str());
  } else {
    std::printf("ok: %s\n", what.c_str());
  }
}

void expect_run(const std::string& args, int want_rc, const std::string& needle) {
  std::string out;
  int rc = run(args, &out);
  bool ok = rc == want_rc && (needle.empty() || out.find(needle) != std::string::npos);
  expect(ok, args + " -> rc " + std::to_string(want_rc) +
                 (needle.empty() ? "" : " with '" + needle + "'"),
         out);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: cli_e2e <osdom-binary> <data-dir>\n");
    return 2;
  }
  bin = argv[1];
  data = argv[2];
  const char* env_tmp = std::getenv("TMPDIR");
  tmpdir = (env_tmp ? std::string(env_tmp) : "/tmp") + "/osdom-e2e";
  if (std::system(("mkdir -p " + tmpdir).c_str()) != 0) return 2;

  // compute on the figure posets
  expect_run("compute --poset " + data + "/fig1P.poset", 0, "gamma_os = 2");
  expect_run("compute --poset " + data + "/fig1R.poset", 0, "gamma_os = 1");
  expect_run("compute --poset " + data + "/fig1P.poset --os-method via_star", 0, "gamma_os = 2");
  expect_run("compute --poset " + data + "/fig8.poset", 0, "gamma_os = 3");

  // graph parameters
  expect_run("graph --op roman --graph " + data + "/c6.col", 0, "gamma_R = 4");
  expect_run("graph --op gamma --graph " + data + "/c6.col", 0, "gamma = 2");
  expect_run("graph --op gamma_t --graph " + data + "/c6.col", 0, "gamma_t = 4");
  expect_run("graph --op theta --graph " + data + "/p4.col", 0, "theta = 3");
  expect_run("graph --op chi --graph " + data + "/c6.col", 0, "chi = 2");
  expect_run("graph --op free --family c6 --graph " + data + "/c6.col", 0, "c6-free = no");

  // transforms write files plus traces
  expect_run("transform --op pk --k 3 --graph " + data + "/p4.col --out " + tmpdir +
                 "/p3p4.poset --trace " + tmpdir + "/p3p4.trace",
             0, "12 elements");
  expect_run("compute --poset " + tmpdir + "/p3p4.poset", 0, "gamma_os = 3");
  expect_run("transform --op bipartite --poset " + data + "/fig6.poset --out " + tmpdir +
                 "/fig6.bip",
             0, "8 vertices");
  expect_run("graph --op bp --bipartite " + tmpdir + "/fig6.bip", 0, "bp = 2");
  expect_run("graph --op bp-stars --bipartite " + tmpdir + "/fig6.bip --poset " + data +
                 "/fig6.poset",
             0, "bp = 2");
  expect_run("transform --op star --poset " + data + "/fig1P.poset --out " + tmpdir +
                 "/fig1Pstar.poset",
             0, "9 elements");
  expect_run("transform --op red3 --poset " + data + "/fig3.poset --out " + tmpdir +
                 "/fig3red.poset --trace " + tmpdir + "/fig3red.trace",
             0, "10 elements");
  expect_run("transform --op b4 --bipartite " + data + "/fig5.bip --out " + tmpdir +
                 "/fig5b4.poset",
             0, "14 elements");
  expect_run("compute --poset " + tmpdir + "/fig5b4.poset", 0, "gamma_os = 3");
  expect_run("transform --op md --poset " + data + "/fig8.poset --out " + tmpdir + "/fig8md.col",
             0, "4 vertices");
  expect_run("graph --op we --graph " + tmpdir + "/fig8md.col", 0, "we = 4");
  expect_run("transform --op family --family " + data + "/sample.fam --out " + tmpdir +
                 "/fam.poset",
             0, "8 elements");

  // remaining graph ops
  expect_run("graph --op roman-2packing --graph " + data + "/c6.col", 0, "gamma_R = 4");
  expect_run("graph --op vdt --graph " + data + "/c4.col", 0, "vdt = 0");
  expect_run("graph --op gamma --method enum --graph " + data + "/p4.col", 0, "gamma = 2");

  // remaining transforms
  expect_run("transform --op maxmin --poset " + data + "/fig1P.poset --out " + tmpdir +
                 "/mm.poset",
             0, "5 elements");
  expect_run("transform --op dual --poset " + data + "/fig7.poset --out " + tmpdir + "/dual.poset",
             0, "8 elements");
  expect_run("transform --op comp --poset " + data + "/fig1P.poset --out " + tmpdir + "/comp.col",
             0, "5 vertices");
  expect_run("transform --op square --graph " + data + "/p4.col --out " + tmpdir + "/sq.col", 0,
             "4 vertices");
  expect_run("transform --op bext --graph " + data + "/c4.col --out " + tmpdir + "/bext.bip", 0,
             "8 vertices");
  expect_run("graph --op free --family c6 --bipartite " + tmpdir + "/bext.bip", 0, "c6-free = no");
  expect_run("transform --op hu --poset " + data + "/fig8.poset --out " + tmpdir + "/hu.col", 0,
             "6 vertices");
  expect_run("transform --op hd --poset " + data + "/fig8.poset --out " + tmpdir + "/hd.col", 0,
             "5 vertices");

  // golden output: byte-identical reruns of one command
  {
    std::string first, second;
    run("compute --poset " + data + "/fig1P.poset", &first);
    run("compute --poset " + data + "/fig1P.poset", &second);
    expect(first == second && first == "gamma_os = 2\nwitness = {1, 4}\n",
           "compute output is byte-stable", first);
  }

  // helly checks
  expect_run("helly --poset " + data + "/fig8.poset", 0, "complete_helly = no");
  expect_run("helly --poset " + data + "/fig7.poset", 0, "helly = yes");
  expect_run("helly --family " + data + "/sample.fam", 0, "helly = yes");

  // reduction
  expect_run("reduce-sat --cnf " + data + "/sample.cnf --k 4 --out " + tmpdir +
                 "/red.poset --check",
             0, "agree");
  expect_run("compute --poset " + tmpdir + "/red.poset", 0, "gamma_os =");

  // verification
  expect_run("verify --suite examples --seed 1 --summary " + tmpdir + "/examples.summary", 0,
             "0 failures");
  expect_run("verify --suite star --trials 15 --seed 3 --size-max 9 --summary " + tmpdir +
                 "/star.summary",
             0, "0 failures");
  {
    std::string summary = slurp(tmpdir + "/star.summary");
    expect(summary.find("status=pass") != std::string::npos, "summary file has status=pass",
           summary);
  }

  expect_run("formats", 0, "poset <n>");
  expect_run("suites", 0, "hardness");

  // error paths: computation errors exit 1, usage errors exit 2
  expect_run("compute --poset " + data + "/no-such-file.poset", 1, "FormatError");
  expect_run("graph --op gamma_t --graph " + tmpdir + "/isolated.col", 1, "");
  {
    std::ofstream bad(tmpdir + "/isolated.col");
    bad << "p edge 2 0\n";
  }
  expect_run("graph --op gamma_t --graph " + tmpdir + "/isolated.col", 1, "IsolatedVertexError");
  expect_run("transform --op red3 --poset " + data + "/fig1P.poset --out " + tmpdir + "/x.poset",
             1, "HeightError");
  expect_run("compute", 2, "");
  expect_run("verify --suite nonsense --seed 1", 1, "UnknownSuite");

  std::printf("%s: %d failures\n", failures == 0 ? "CLI E2E PASS" : "CLI E2E FAIL", failures);
  return failures == 0 ? 0 : 1;
}
