#ifndef NSAT_HARNESS_HPP
#define NSAT_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "model.hpp"
#include "prep.hpp"
#include "solver.hpp"

namespace nsat {

struct OracleLimitError : std::runtime_error {
  explicit OracleLimitError(int32_t n, int32_t limit)
      : std::runtime_error("brute force refuses n = " + std::to_string(n) +
                           " variables (limit " + std::to_string(limit) + ")") {}
};

std::vector<LitSpan> clause_views(const RawClauseSet& raw);
std::vector<LitSpan> clause_views(const ClauseDb& db);

struct BruteForceResult {
  Verdict verdict = Verdict::UNSAT;
  std::vector<Assignment> models;  // all satisfying full assignments, when collected
};

// Enumerates all 2^n full assignments. A partial satisfying clause exists iff
// a full assignment works, so this decides the same question the solver does.
// Throws OracleLimitError for n above the limit.
BruteForceResult brute_force_sat(const std::vector<LitSpan>& clauses, int32_t n,
                                 int32_t limit = 20, bool collect_models = true);
BruteForceResult brute_force_sat(const RawClauseSet& raw, int32_t limit = 20,
                                 bool collect_models = true);
BruteForceResult brute_force_sat(const ClauseDb& db, int32_t limit = 20,
                                 bool collect_models = true);

// True iff every clause contains a literal whose variable is assigned with
// matching polarity.
bool check_witness(const std::vector<LitSpan>& clauses, const Assignment& a);
bool check_witness(const RawClauseSet& raw, const Assignment& a);
bool check_witness(const ClauseDb& db, const Assignment& a);

struct FuzzCounterexample {
  std::string dimacs;  // minimized reproducer
  Verdict solver_verdict = Verdict::UNSAT;
  Verdict oracle_verdict = Verdict::UNSAT;
  std::string kind;  // "verdict" or "witness"
};

struct FuzzReport {
  uint64_t instances = 0;
  uint64_t agreements = 0;
  uint64_t seed = 0;
  std::optional<FuzzCounterexample> counterexample;  // present iff agreements < instances
  std::string csv;  // header plus one row per instance

  bool all_agree() const { return agreements == instances; }
  std::string to_text() const;
};

using SolveFn = std::function<Verdict(const ClauseDb&)>;

// Generates `count` nested instances (deterministic in seed; instance i uses
// a sub-seed derived from (seed, i)), compares the solver against the oracle,
// and for satisfiable instances also extracts and checks a witness.
// Disagreement is recorded, not thrown; the first counterexample is minimized
// by greedily dropping clauses and then unused variables.
FuzzReport differential_fuzz(uint64_t count, int32_t max_vars, uint64_t seed);

// Same loop with an injected solver and no witness phase; lets tests drive
// the disagreement/minimization machinery with a deliberately broken solver.
FuzzReport differential_fuzz(uint64_t count, int32_t max_vars, uint64_t seed,
                             const SolveFn& solver);

struct BenchPoint {
  int32_t n = 0;
  int32_t m = 0;
  int64_t lits = 0;
  double seconds = 0.0;  // best of `repeats` solves
  uint64_t visited_x = 0;
  uint64_t visit_bound = 0;
};

struct BenchReport {
  std::vector<BenchPoint> points;
  uint64_t seed = 0;
  std::vector<double> time_ratios;  // consecutive point ratios
  double growth_slope = 0.0;        // log-log slope of time vs n+m, first to last point

  std::string to_text() const;
  std::string to_csv() const;
};

// Times solve() on generated instances of the given (n, m) sizes. Generation
// is excluded from the timing. The visited-x bound is a hard assertion.
BenchReport bench_linear(const std::vector<std::pair<int32_t, int32_t>>& sizes,
                         uint64_t seed, int repeats = 3);

}  // namespace nsat

#endif
