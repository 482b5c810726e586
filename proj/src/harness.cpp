#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "nesting.hpp"
#include "rng.hpp"

namespace nsat {

std::vector<LitSpan> clause_views(const RawClauseSet& raw) {
  std::vector<LitSpan> views;
  views.reserve(raw.clauses.size());
  for (const auto& c : raw.clauses) views.emplace_back(c.data(), c.size());
  return views;
}

std::vector<LitSpan> clause_views(const ClauseDb& db) {
  std::vector<LitSpan> views;
  views.reserve(db.clause_count());
  for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
  return views;
}

BruteForceResult brute_force_sat(const std::vector<LitSpan>& clauses, int32_t n,
                                 int32_t limit, bool collect_models) {
  if (n > limit) throw OracleLimitError(n, limit);
  BruteForceResult result;
  const uint64_t total = static_cast<uint64_t>(1) << n;
  for (uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (const LitSpan& c : clauses) {
      bool clause_ok = false;
      for (int32_t lit : c) {
        const int32_t v = std::abs(lit);
        const bool val = (bits >> (v - 1)) & 1;
        if (val == (lit > 0)) {
          clause_ok = true;
          break;
        }
      }
      if (!clause_ok) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    result.verdict = Verdict::SAT;
    if (!collect_models) return result;
    Assignment a(n);
    for (int32_t v = 1; v <= n; ++v) a.set(v, (bits >> (v - 1)) & 1);
    result.models.push_back(std::move(a));
  }
  return result;
}

BruteForceResult brute_force_sat(const RawClauseSet& raw, int32_t limit,
                                 bool collect_models) {
  return brute_force_sat(clause_views(raw), raw.n, limit, collect_models);
}

BruteForceResult brute_force_sat(const ClauseDb& db, int32_t limit, bool collect_models) {
  return brute_force_sat(clause_views(db), db.var_count(), limit, collect_models);
}

bool check_witness(const std::vector<LitSpan>& clauses, const Assignment& a) {
  for (const LitSpan& c : clauses) {
    bool met = false;
    for (int32_t lit : c) {
      if (a.satisfies_literal(lit)) {
        met = true;
        break;
      }
    }
    if (!met) return false;
  }
  return true;
}

bool check_witness(const RawClauseSet& raw, const Assignment& a) {
  return check_witness(clause_views(raw), a);
}

bool check_witness(const ClauseDb& db, const Assignment& a) {
  return check_witness(clause_views(db), a);
}

namespace {

const char* verdict_name(Verdict v) { return v == Verdict::SAT ? "SAT" : "UNSAT"; }

ClauseDb without_clause(const ClauseDb& db, int32_t drop) {
  std::vector<int32_t> lit;
  std::vector<int32_t> start{0};
  for (int32_t i = 0; i < db.clause_count(); ++i) {
    if (i == drop) continue;
    const LitSpan c = db.clause(i);
    lit.insert(lit.end(), c.begin(), c.end());
    start.push_back(static_cast<int32_t>(lit.size()));
  }
  return ClauseDb::from_parts(db.var_count(), std::move(lit), std::move(start));
}

// Renumbers to the variables actually used. Monotone relabeling, so straddle
// structure and both verdicts are preserved.
ClauseDb compact_vars(const ClauseDb& db) {
  std::vector<int32_t> used;
  for (int32_t i = 0; i < db.clause_count(); ++i) {
    for (int32_t lit : db.clause(i)) used.push_back(std::abs(lit));
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int32_t> rank(static_cast<size_t>(db.var_count()) + 1, 0);
  for (size_t i = 0; i < used.size(); ++i) rank[used[i]] = static_cast<int32_t>(i) + 1;
  std::vector<int32_t> lit;
  std::vector<int32_t> start{0};
  for (int32_t i = 0; i < db.clause_count(); ++i) {
    for (int32_t l : db.clause(i)) {
      const int32_t v = rank[std::abs(l)];
      lit.push_back(l > 0 ? v : -v);
    }
    start.push_back(static_cast<int32_t>(lit.size()));
  }
  return ClauseDb::from_parts(static_cast<int32_t>(used.size()), std::move(lit),
                              std::move(start));
}

// Greedy shrink: drop clauses while the failure persists, then compact the
// variable range.
ClauseDb minimize_failure(ClauseDb db, const std::function<bool(const ClauseDb&)>& fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int32_t i = 0; i < db.clause_count(); ++i) {
      ClauseDb candidate = without_clause(db, i);
      if (fails(candidate)) {
        db = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  ClauseDb compacted = compact_vars(db);
  if (fails(compacted)) return compacted;
  return db;
}

GeneratorConfig fuzz_config(int32_t max_vars, uint64_t sub_seed) {
  Rng rng(sub_seed);
  GeneratorConfig cfg;
  cfg.vars = static_cast<int32_t>(rng.below(static_cast<uint32_t>(max_vars) + 1));
  cfg.clauses = cfg.vars < 2
                    ? 0
                    : static_cast<int32_t>(rng.below(static_cast<uint32_t>(2 * cfg.vars) + 4));
  cfg.max_width = 2 + static_cast<int32_t>(rng.below(5));
  cfg.interior_prob = 0.2 + 0.15 * rng.below(5);
  cfg.negate_prob = 0.5;
  cfg.seed = rng.next();
  return cfg;
}

FuzzReport fuzz_impl(uint64_t count, int32_t max_vars, uint64_t seed,
                     const SolveFn& solver, bool check_witnesses) {
  FuzzReport report;
  report.seed = seed;
  std::ostringstream csv;
  csv << "index,n,m,lits,solver,oracle,agree\n";
  const int32_t limit = std::max(20, max_vars);

  for (uint64_t i = 0; i < count; ++i) {
    const GeneratorConfig cfg = fuzz_config(max_vars, mix_seed(seed, i));
    const ClauseDb db = generate_nested(cfg);
    ++report.instances;

    const Verdict got = solver(db);
    const Verdict want = brute_force_sat(db, limit, false).verdict;
    bool ok = got == want;
    std::string kind = "verdict";
    if (ok && check_witnesses && got == Verdict::SAT) {
      const auto witness = extract_witness(db);
      if (!witness || !check_witness(db, *witness)) {
        ok = false;
        kind = "witness";
      }
    }

    csv << i << ',' << db.var_count() << ',' << db.clause_count() << ','
        << db.literal_count() << ',' << verdict_name(got) << ',' << verdict_name(want)
        << ',' << (ok ? 1 : 0) << '\n';

    if (ok) {
      ++report.agreements;
      continue;
    }
    if (report.counterexample) continue;

    const auto fails = [&](const ClauseDb& candidate) -> bool {
      const Verdict s = solver(candidate);
      const Verdict o = brute_force_sat(candidate, limit, false).verdict;
      if (kind == "verdict") return s != o;
      if (s != Verdict::SAT || o != Verdict::SAT) return false;
      const auto w = extract_witness(candidate);
      return !w || !check_witness(candidate, *w);
    };
    const ClauseDb shrunk = minimize_failure(db, fails);
    FuzzCounterexample ce;
    ce.dimacs = emit_dimacs(shrunk);
    ce.solver_verdict = solver(shrunk);
    ce.oracle_verdict = brute_force_sat(shrunk, limit, false).verdict;
    ce.kind = kind;
    report.counterexample = std::move(ce);
  }
  report.csv = csv.str();
  return report;
}

}  // namespace

FuzzReport differential_fuzz(uint64_t count, int32_t max_vars, uint64_t seed) {
  const SolveFn solver = [](const ClauseDb& db) { return solve(db).verdict; };
  return fuzz_impl(count, max_vars, seed, solver, true);
}

FuzzReport differential_fuzz(uint64_t count, int32_t max_vars, uint64_t seed,
                             const SolveFn& solver) {
  return fuzz_impl(count, max_vars, seed, solver, false);
}

std::string FuzzReport::to_text() const {
  std::ostringstream os;
  os << "fuzz seed=" << seed << " instances=" << instances
     << " agreements=" << agreements << " disagreements=" << (instances - agreements)
     << '\n';
  if (counterexample) {
    os << "counterexample (" << counterexample->kind
       << "): solver=" << verdict_name(counterexample->solver_verdict)
       << " oracle=" << verdict_name(counterexample->oracle_verdict) << '\n'
       << counterexample->dimacs;
  }
  return os.str();
}

BenchReport bench_linear(const std::vector<std::pair<int32_t, int32_t>>& sizes,
                         uint64_t seed, int repeats) {
  BenchReport report;
  report.seed = seed;
  for (size_t idx = 0; idx < sizes.size(); ++idx) {
    GeneratorConfig cfg;
    cfg.vars = sizes[idx].first;
    cfg.clauses = sizes[idx].second;
    cfg.max_width = 6;
    cfg.seed = mix_seed(seed, idx);
    const ClauseDb db = generate_nested(cfg);

    BenchPoint point;
    point.n = db.var_count();
    point.m = db.clause_count();
    point.lits = db.literal_count();
    point.seconds = 1e300;
    for (int rep = 0; rep < std::max(1, repeats); ++rep) {
      const auto begin = std::chrono::steady_clock::now();
      const SolveResult r = solve(db);
      const auto end = std::chrono::steady_clock::now();
      point.seconds =
          std::min(point.seconds, std::chrono::duration<double>(end - begin).count());
      point.visited_x = r.visited_x;
      point.visit_bound = r.visit_bound;
      if (r.visited_x > r.visit_bound) {
        throw std::logic_error("visited-x bound violated in benchmark");
      }
    }
    report.points.push_back(point);
  }
  for (size_t i = 0; i + 1 < report.points.size(); ++i) {
    const double a = std::max(report.points[i].seconds, 1e-9);
    report.time_ratios.push_back(report.points[i + 1].seconds / a);
  }
  if (report.points.size() >= 2) {
    const BenchPoint& first = report.points.front();
    const BenchPoint& last = report.points.back();
    const double size_ratio = (static_cast<double>(last.n) + last.m) /
                              std::max(1.0, static_cast<double>(first.n) + first.m);
    const double time_ratio = last.seconds / std::max(first.seconds, 1e-9);
    if (size_ratio > 1.0) {
      report.growth_slope = std::log(std::max(time_ratio, 1e-9)) / std::log(size_ratio);
    }
  }
  return report;
}

std::string BenchReport::to_text() const {
  std::ostringstream os;
  os << "bench seed=" << seed << '\n';
  for (const BenchPoint& p : points) {
    os << "n=" << p.n << " m=" << p.m << " lits=" << p.lits << " time=" << p.seconds
       << "s visited_x=" << p.visited_x << " bound=" << p.visit_bound << '\n';
  }
  for (size_t i = 0; i < time_ratios.size(); ++i) {
    os << "ratio point" << i + 1 << "/point" << i << " = " << time_ratios[i] << '\n';
  }
  if (points.size() >= 2) os << "growth slope (log time / log size) = " << growth_slope << '\n';
  return os.str();
}

std::string BenchReport::to_csv() const {
  std::ostringstream os;
  os << "n,m,lits,seconds,visited_x,visit_bound\n";
  for (const BenchPoint& p : points) {
    os << p.n << ',' << p.m << ',' << p.lits << ',' << p.seconds << ',' << p.visited_x
       << ',' << p.visit_bound << '\n';
  }
  return os.str();
}

}  // namespace nsat
