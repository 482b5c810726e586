#include <sstream>

#include "doctest.h"
#include "harness.hpp"
#include "test_util.hpp"

using namespace nsat;

TEST_CASE("brute force on the intro example: SAT, and the model set is exactly two") {
  const ClauseDb db = test::intro_example();
  const BruteForceResult r = brute_force_sat(db);
  CHECK(r.verdict == Verdict::SAT);

  Assignment named(3);  // {a, b, not-c} = {1:T, 2:T, 3:F}
  named.set(1, true);
  named.set(2, true);
  named.set(3, false);
  bool named_found = false;
  for (const Assignment& model : r.models) named_found |= model == named;
  CHECK(named_found);

  // Enumeration also finds {1:F, 2:T, 3:T}, so {1:T, 2:T, 3:F} is NOT the
  // unique satisfier of this set; the enumeration is authoritative and the
  // model count is frozen at two.
  Assignment second(3);
  second.set(1, false);
  second.set(2, true);
  second.set(3, true);
  bool second_found = false;
  for (const Assignment& model : r.models) second_found |= model == second;
  CHECK(second_found);
  CHECK(r.models.size() == 2);
}

TEST_CASE("brute force finds no model for the 2-variable contradiction") {
  const ClauseDb db = test::make_db({{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}, 2);
  const BruteForceResult r = brute_force_sat(db);
  CHECK(r.verdict == Verdict::UNSAT);
  CHECK(r.models.empty());
}

TEST_CASE("brute force refuses oversized instances") {
  RawClauseSet raw;
  raw.n = 21;
  CHECK_THROWS_AS(brute_force_sat(raw), OracleLimitError);
  CHECK_NOTHROW(brute_force_sat(raw, 21, false));
}

TEST_CASE("check_witness examples") {
  const ClauseDb db = test::intro_example();
  Assignment good(3);
  good.set(1, true);
  good.set(2, true);
  good.set(3, false);
  CHECK(check_witness(db, good));

  Assignment bad(3);
  bad.set(1, false);
  bad.set(2, false);
  bad.set(3, false);
  CHECK_FALSE(check_witness(db, bad));  // {1,2} has no true literal

  CHECK(check_witness(test::make_db({}, 0), Assignment(0)));
}

TEST_CASE("differential fuzzing agrees on a healthy solver") {
  const FuzzReport r = differential_fuzz(300, 12, 2024);
  CHECK(r.instances == 300);
  CHECK(r.agreements == 300);
  CHECK(r.all_agree());
  CHECK_FALSE(r.counterexample.has_value());

  // header plus one csv row per instance
  int lines = 0;
  std::stringstream ss(r.csv);
  std::string line;
  while (std::getline(ss, line)) ++lines;
  CHECK(lines == 301);

  // deterministic in the seed
  const FuzzReport again = differential_fuzz(300, 12, 2024);
  CHECK(again.csv == r.csv);
}

TEST_CASE("fuzzing the empty variable range trivially agrees") {
  const FuzzReport r = differential_fuzz(1, 0, 7);
  CHECK(r.instances == 1);
  CHECK(r.agreements == 1);
}

TEST_CASE("an injected broken solver yields a minimized counterexample") {
  // wrong whenever any clause survives
  const SolveFn broken = [](const ClauseDb& db) {
    return db.clause_count() == 0 ? solve(db).verdict : Verdict::UNSAT;
  };
  const FuzzReport r = differential_fuzz(50, 10, 99, broken);
  CHECK(r.agreements < r.instances);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->kind == "verdict");
  CHECK(r.counterexample->solver_verdict != r.counterexample->oracle_verdict);

  // the reproducer still disagrees and is minimal: one clause on a compacted
  // variable range
  const ParseResult parsed = parse_dimacs(r.counterexample->dimacs);
  const NormalizedInstance ni = normalize(parsed.set);
  REQUIRE(ni.status == InstanceStatus::OPEN);
  CHECK(ni.db.clause_count() == 1);
  CHECK(ni.db.var_count() == span_max_var(ni.db.clause(0)));
  CHECK(broken(ni.db) != brute_force_sat(ni.db, 20, false).verdict);
}

TEST_CASE("counterexample is present exactly when agreement is not total") {
  const FuzzReport clean = differential_fuzz(40, 8, 5);
  CHECK((clean.agreements < clean.instances) == clean.counterexample.has_value());

  const SolveFn wrong = [](const ClauseDb&) { return Verdict::UNSAT; };
  const FuzzReport dirty = differential_fuzz(40, 8, 5, wrong);
  CHECK((dirty.agreements < dirty.instances) == dirty.counterexample.has_value());
}

TEST_CASE("bench_linear reports points and holds the visit bound") {
  const BenchReport r = bench_linear({{1000, 500}, {10000, 5000}}, 17, 2);
  REQUIRE(r.points.size() == 2);
  for (const BenchPoint& p : r.points) {
    CHECK(p.visited_x <= p.visit_bound);
    CHECK(p.visit_bound == 2 * (static_cast<uint64_t>(p.m) + 1) + p.n);
    CHECK(p.seconds >= 0.0);
    CHECK(p.lits <= 2 * static_cast<int64_t>(p.m) + p.n);
  }
  CHECK(r.time_ratios.size() == 1);

  const std::string csv = r.to_csv();
  CHECK(csv.find("n,m,lits,seconds,visited_x,visit_bound") == 0);
  const std::string text = r.to_text();
  CHECK(text.find("growth slope") != std::string::npos);
}
