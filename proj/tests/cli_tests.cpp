// End-to-end tests for the nsat command line tool: spawns the real binary and
// checks exit codes, stdout/stderr, and that emitted artifacts re-validate
// through the core library.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "harness.hpp"
#include "nesting.hpp"
#include "prep.hpp"

namespace {

int g_failures = 0;
std::string g_nsat;
std::string g_dir;

void expect(bool ok, const std::string& what) {
  if (ok) return;
  ++g_failures;
  std::cerr << "FAIL: " << what << '\n';
}

std::string path_of(const std::string& name) { return g_dir + "/" + name; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args, const std::string& stdin_file = "") {
  const std::string out_f = path_of("stdout.txt");
  const std::string err_f = path_of("stderr.txt");
  std::string cmd = g_nsat + " " + args;
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  cmd += " > " + out_f + " 2> " + err_f;
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = read_file(out_f);
  r.err = read_file(err_f);
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Reads a "v <lits> 0" line into an assignment.
nsat::Assignment parse_v_line(const std::string& out, int32_t n) {
  nsat::Assignment a(n);
  std::istringstream ss(out);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.size() < 2 || line[0] != 'v') continue;
    std::istringstream lits(line.substr(1));
    int32_t lit;
    while (lits >> lit) {
      if (lit == 0) break;
      a.set(std::abs(lit), lit > 0);
    }
  }
  return a;
}

const char* kTriangle = "p cnf 3 3\n1 2 0\n2 3 0\n1 3 0\n";
const char* kContradiction = "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n";
const char* kIntro = "p cnf 3 5\n1 -2 3 0\n-1 -3 0\n-1 2 3 0\n-1 -3 0\n1 2 0\n";

void test_solve_verdicts() {
  write_file(path_of("sat.cnf"), kTriangle);
  RunResult r = run("solve " + path_of("sat.cnf"));
  expect(r.exit_code == 10, "solve SAT exits 10, got " + std::to_string(r.exit_code));
  expect(contains(r.out, "s SATISFIABLE"), "solve prints s SATISFIABLE");

  write_file(path_of("unsat.cnf"), kContradiction);
  r = run("solve " + path_of("unsat.cnf"));
  expect(r.exit_code == 20, "solve UNSAT exits 20");
  expect(contains(r.out, "s UNSATISFIABLE"), "solve prints s UNSATISFIABLE");
}

void test_witness_validates_against_original() {
  write_file(path_of("sat.cnf"), kTriangle);
  const RunResult r = run("solve --witness " + path_of("sat.cnf"));
  expect(r.exit_code == 10, "witness run exits 10");
  const auto parsed = nsat::parse_dimacs(kTriangle);
  const nsat::Assignment a = parse_v_line(r.out, parsed.set.n);
  expect(a.assigned_count() == 3, "v line assigns every variable");
  expect(nsat::check_witness(parsed.set, a), "witness satisfies the original file");

  // forced values from unit propagation appear in the v line
  write_file(path_of("units.cnf"), "p cnf 3 2\n2 0\n-2 3 0\n");
  const RunResult u = run("solve --witness " + path_of("units.cnf"));
  expect(u.exit_code == 10, "units file is SAT");
  const nsat::Assignment ua = parse_v_line(u.out, 3);
  expect(ua.value(2) && ua.value(3), "propagated units are in the witness");
  const auto uparsed = nsat::parse_dimacs(read_file(path_of("units.cnf")));
  expect(nsat::check_witness(uparsed.set, ua), "units witness validates");
}

void test_check_and_sort() {
  write_file(path_of("intro.cnf"), kIntro);
  RunResult r = run("check " + path_of("intro.cnf"));
  expect(r.exit_code == 2, "check on overlapping instance exits 2");
  expect(contains(r.out, "not nested"), "check reports not nested");
  expect(contains(r.out, "1 and 3"), "check names the witness pair");

  r = run("sort " + path_of("intro.cnf"));
  expect(r.exit_code == 2, "sort on overlapping instance exits 2");

  write_file(path_of("unordered.cnf"), "p cnf 3 3\n1 3 0\n2 3 0\n1 2 0\n");
  r = run("check " + path_of("unordered.cnf"));
  expect(r.exit_code == 0, "check on nested instance exits 0");
  expect(contains(r.out, "nested: yes"), "check reports nested");
  expect(contains(r.out, "ordered: no"), "check reports order violation");

  r = run("sort " + path_of("unordered.cnf"));
  expect(r.exit_code == 0, "sort on nested instance exits 0");
  const auto sorted = nsat::parse_dimacs(r.out);
  nsat::NormalizedInstance ni = nsat::normalize(sorted.set);
  expect(!nsat::verify_order(ni.db).has_value(), "sorted output passes verify_order");
  expect(ni.db.clause_count() == 3, "sort keeps every clause");

  // strict solve: unordered input is refused, sorted output is accepted
  r = run("solve --no-sort " + path_of("unordered.cnf"));
  expect(r.exit_code == 2, "solve --no-sort refuses bad order with exit 2");
  write_file(path_of("ordered.cnf"), nsat::emit_dimacs(ni.db));
  r = run("solve --no-sort " + path_of("ordered.cnf"));
  expect(r.exit_code == 10, "solve --no-sort accepts a valid order");

  // units and tautologies are fine for the structural commands
  write_file(path_of("degenerate.cnf"), "p cnf 3 3\n2 0\n1 -1 3 0\n1 3 0\n");
  r = run("check " + path_of("degenerate.cnf"));
  expect(r.exit_code == 0, "check accepts units and tautologies");
  expect(contains(r.out, "nested: yes"), "degenerate clauses judged by var spans");
  r = run("sort " + path_of("degenerate.cnf"));
  expect(r.exit_code == 0, "sort accepts units and tautologies");
  expect(nsat::parse_dimacs(r.out).set.clauses.size() == 3, "sort keeps all 3 clauses");
  r = run("solve --witness " + path_of("degenerate.cnf"));
  expect(r.exit_code == 10, "degenerate file solves SAT");
  const auto dparsed = nsat::parse_dimacs(read_file(path_of("degenerate.cnf")));
  expect(nsat::check_witness(dparsed.set, parse_v_line(r.out, 3)),
         "degenerate witness validates");
}

void test_gen() {
  RunResult a = run("gen --vars 12 --clauses 6 --seed 42");
  RunResult b = run("gen --vars 12 --clauses 6 --seed 42");
  expect(a.exit_code == 0, "gen exits 0");
  expect(a.out == b.out, "gen is deterministic in the seed");
  expect(contains(a.out, "p cnf 12 6"), "gen header matches the request");

  const auto parsed = nsat::parse_dimacs(a.out);
  nsat::NormalizedInstance ni = nsat::normalize(parsed.set);
  expect(!nsat::is_nested(ni.db).has_value(), "generated instance is nested");
  expect(!nsat::verify_order(ni.db).has_value(), "generated instance is ordered");
  expect(nsat::literal_bound_check(ni.db), "generated instance is within 2m+n");

  const RunResult tiny = run("gen --vars 1 --clauses 3 --seed 1");
  expect(tiny.exit_code == 0, "gen with unreachable target still exits 0");
  expect(contains(tiny.out, "p cnf 1 0"), "unreachable target yields zero clauses");
  expect(contains(tiny.err, "target 3 unreachable"), "shortfall goes to stderr");
}

void test_fuzz_and_bench() {
  const RunResult f = run("fuzz --count 80 --max-vars 10 --seed 3");
  expect(f.exit_code == 0, "fuzz exits 0 on agreement");
  expect(contains(f.out, "agreements=80"), "fuzz reports agreements");

  const RunResult b = run("bench --seed 3 --sizes 60:25,600:250");
  expect(b.exit_code == 0, "bench exits 0");
  expect(contains(b.out, "growth slope"), "bench reports the growth slope");

  const RunResult csv = run("bench --seed 3 --sizes 60:25 --csv");
  expect(contains(csv.out, "n,m,lits,seconds"), "bench --csv emits the table");
}

void test_stdin_and_errors() {
  write_file(path_of("sat.cnf"), kTriangle);
  const RunResult piped = run("solve -", path_of("sat.cnf"));
  expect(piped.exit_code == 10, "solve reads standard input via '-'");

  RunResult r = run("frobnicate");
  expect(r.exit_code == 1, "unknown command exits 1");
  expect(contains(r.err, "usage"), "unknown command prints usage to stderr");

  r = run("solve " + path_of("missing.cnf"));
  expect(r.exit_code == 1, "missing file exits 1");

  r = run("solve --frob " + path_of("sat.cnf"));
  expect(r.exit_code == 1, "unknown flag exits 1");

  write_file(path_of("broken.cnf"), "p cnf 1 1\n2 0\n");
  r = run("solve " + path_of("broken.cnf"));
  expect(r.exit_code == 1, "parse error exits 1");
  expect(contains(r.err, "line 2"), "parse error names the line");

  r = run("gen --vars x --clauses 2 --seed 1");
  expect(r.exit_code == 1, "non-numeric option value exits 1");
}

void test_exit_codes_match_verdicts() {
  for (int seed = 0; seed < 8; ++seed) {
    const RunResult g = run("gen --vars 10 --clauses 8 --seed " + std::to_string(seed));
    write_file(path_of("fuzzed.cnf"), g.out);
    const RunResult s = run("solve " + path_of("fuzzed.cnf"));
    const bool says_sat = contains(s.out, "s SATISFIABLE");
    const bool says_unsat = contains(s.out, "s UNSATISFIABLE");
    expect(says_sat != says_unsat, "exactly one verdict line");
    expect(s.exit_code == (says_sat ? 10 : 20), "exit code matches printed verdict");

    const auto parsed = nsat::parse_dimacs(g.out);
    const auto oracle = nsat::brute_force_sat(parsed.set, 20, false);
    expect(says_sat == (oracle.verdict == nsat::Verdict::SAT),
           "CLI verdict matches the oracle");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-nsat>\n";
    return 2;
  }
  g_nsat = argv[1];
  char tmpl[] = "/tmp/nsat_cli_XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::cerr << "cannot create temp dir\n";
    return 2;
  }
  g_dir = tmpl;

  test_solve_verdicts();
  test_witness_validates_against_original();
  test_check_and_sort();
  test_gen();
  test_fuzz_and_bench();
  test_stdin_and_errors();
  test_exit_codes_match_verdicts();

  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << g_failures << " check(s) failed\n";
  return 1;
}
