#include "solver.hpp"

#include <algorithm>
#include <cstdlib>

#include "nesting.hpp"
#include "prep.hpp"

namespace nsat {

SolverState::SolverState(int32_t var_count) : n(var_count) {
  next.resize(static_cast<size_t>(n) + 1);
  for (int32_t x = 0; x <= n; ++x) next[x] = x + 1;
  sat.assign((static_cast<size_t>(n) + 1) << 2, 1);
}

std::vector<int32_t> SolverState::partition_points() const {
  std::vector<int32_t> points;
  for (int32_t x = next[0]; x <= n; x = next[x]) points.push_back(x);
  return points;
}

SolverState init_state(int32_t var_count) { return SolverState(var_count); }

namespace {

inline void modify_step(NewsatTable& ns, const uint8_t* sat_x) {
  NewsatTable tmp;
  for (int s = 0; s < 2; ++s) {
    const uint8_t nf = ns.v[s << 1];
    const uint8_t nt = ns.v[(s << 1) | 1];
    for (int t = 0; t < 2; ++t) {
      const uint8_t a = static_cast<uint8_t>(nf * sat_x[t]);
      const uint8_t b = static_cast<uint8_t>(nt * sat_x[2 | t]);
      tmp.v[(s << 1) | t] = a > b ? a : b;
    }
  }
  ns = tmp;
}

inline void upgrade_step(NewsatTable& ns, bool t) {
  for (int s = 0; s < 2; ++s) {
    uint8_t& e = ns.v[(s << 1) | (t ? 1 : 0)];
    if (e == 1) e = 2;
  }
}

}  // namespace

NewsatTable compute_newsat(SolverState& state, LitSpan clause, NewsatTrace* trace) {
  if (clause.size() < 2) {
    throw std::invalid_argument("clause must have at least two literals");
  }
  size_t j = 0;
  int32_t sig = clause[0];
  int32_t x = std::abs(sig);
  const int32_t r = std::abs(clause.back());

  NewsatTable ns;
  ns.v = {1, 0, 0, 1};
  for (;;) {
    ++state.visited;
    if (trace) trace->arrivals.push_back({x, ns});
    if (x == std::abs(sig)) {
      upgrade_step(ns, sig > 0);
      ++j;
      if (j == clause.size()) break;
      sig = clause[j];
    }
    modify_step(ns, &state.sat[static_cast<size_t>(x) << 2]);
    x = state.next[x];
    if (x > r) throw ClauseNotInPartitionError(std::abs(sig));
  }
  return ns;
}

void process_clause(SolverState& state, LitSpan clause) {
  const NewsatTable ns = compute_newsat(state, clause);
  const int32_t l = std::abs(clause.front());
  const int32_t r = std::abs(clause.back());
  state.next[l] = r;
  uint8_t* sl = &state.sat[static_cast<size_t>(l) << 2];
  for (int k = 0; k < 4; ++k) sl[k] = static_cast<uint8_t>(ns.v[k] >> 1);
}

Verdict finalize(SolverState& state) {
  const int32_t end = state.n + 1;
  NewsatTable ns;
  ns.v = {1, 0, 0, 1};
  int32_t x = 0;
  for (;;) {
    ++state.visited;
    if (x == 0 || x == end) {
      upgrade_step(ns, true);  // sentinel literals are positive
      if (x == end) break;
    }
    modify_step(ns, &state.sat[static_cast<size_t>(x) << 2]);
    x = state.next[x];
  }
  state.next[0] = end;
  for (int k = 0; k < 4; ++k) state.sat[k] = static_cast<uint8_t>(ns.v[k] >> 1);
  return state.sat_at(0, true, true) == 1 ? Verdict::SAT : Verdict::UNSAT;
}

SolveResult solve(const ClauseDb& db, SolveOptions opts) {
  const ClauseDb* use = &db;
  ClauseDb sorted;
  if (!db.ordered_checked()) {
    std::vector<LitSpan> views;
    views.reserve(db.clause_count());
    for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
    if (auto violation = verify_order_fast_views(views, db.var_count())) {
      if (!opts.auto_sort) throw NotOrderedError(*violation);
      sorted = sort_nested(db);  // throws NotNestedError when impossible
      use = &sorted;
    }
  }

  SolverState state(use->var_count());
  for (int32_t i = 0; i < use->clause_count(); ++i) {
    process_clause(state, use->clause(i));
  }
  SolveResult result;
  result.verdict = finalize(state);
  result.visited_x = state.visited;
  result.visit_bound =
      2 * (static_cast<uint64_t>(use->clause_count()) + 1) + use->var_count();
  if (result.visited_x > result.visit_bound) {
    throw std::logic_error("visited-x count exceeded 2(m+1)+n");
  }
  return result;
}

int32_t Assignment::assigned_count() const {
  int32_t count = 0;
  for (size_t v = 1; v < val_.size(); ++v) count += val_[v] >= 0;
  return count;
}

namespace {

bool mentions_var(const ClauseDb& db, int32_t var) {
  for (int32_t i = 0; i < db.clause_count(); ++i) {
    for (int32_t lit : db.clause(i)) {
      if (std::abs(lit) == var) return true;
    }
  }
  return false;
}

void merge_forced(Assignment& into, const Assignment& forced) {
  for (int32_t v = 1; v <= forced.var_count(); ++v) {
    if (!forced.is_set(v)) continue;
    if (into.is_set(v) && into.value(v) != forced.value(v)) {
      throw std::logic_error("conflicting forced value during witness extraction");
    }
    into.set(v, forced.value(v));
  }
}

}  // namespace

std::optional<Assignment> extract_witness(const ClauseDb& db) {
  ClauseDb work;
  {
    std::vector<LitSpan> views;
    views.reserve(db.clause_count());
    for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
    if (db.ordered_checked() || !verify_order_fast_views(views, db.var_count())) {
      work = db;
      work.mark_ordered();
    } else {
      work = sort_nested(db);
    }
  }
  if (solve(work, {.auto_sort = false}).verdict == Verdict::UNSAT) return std::nullopt;

  const int32_t n = db.var_count();
  Assignment result(n);
  ClauseDb residual = std::move(work);
  for (int32_t v = 1; v <= n; ++v) {
    if (result.is_set(v)) continue;
    if (residual.clause_count() == 0) break;
    if (!mentions_var(residual, v)) continue;

    NormalizedInstance branch = condition(residual, v, true);
    bool pick_true;
    switch (branch.status) {
      case InstanceStatus::TRIVIALLY_SAT:
        pick_true = true;
        break;
      case InstanceStatus::TRIVIALLY_UNSAT:
        pick_true = false;
        break;
      case InstanceStatus::OPEN:
      default:
        pick_true = solve(branch.db, {.auto_sort = false}).verdict == Verdict::SAT;
        break;
    }
    if (!pick_true) {
      branch = condition(residual, v, false);
      if (branch.status == InstanceStatus::TRIVIALLY_UNSAT) {
        throw std::logic_error("both branches unsatisfiable on a SAT residual");
      }
    }
    result.set(v, pick_true);
    merge_forced(result, branch.forced);
    residual = std::move(branch.db);
  }
  for (int32_t v = 1; v <= n; ++v) {
    if (!result.is_set(v)) result.set(v, false);
  }
  return result;
}

}  // namespace nsat
