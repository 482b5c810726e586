#include "nesting.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace nsat {

namespace {

std::string witness_text(const OverlapWitness& w) {
  return "clauses " + std::to_string(w.clause_i) + " and " + std::to_string(w.clause_j) +
         " overlap (variable " + std::to_string(w.var_of_j_inside_i) +
         " is interior to clause " + std::to_string(w.clause_i) + ", variable " +
         std::to_string(w.var_of_i_inside_j) + " to clause " +
         std::to_string(w.clause_j) + ")";
}

std::string violation_text(const OrderViolation& v) {
  return "clause " + std::to_string(v.earlier) + " straddles later clause " +
         std::to_string(v.later);
}

// First variable of c strictly inside (lo, hi), or 0.
int32_t var_strictly_inside(LitSpan c, int32_t lo, int32_t hi) {
  for (int32_t lit : c) {
    const int32_t v = std::abs(lit);
    if (v > lo && v < hi) return v;
    if (v >= hi) break;
  }
  return 0;
}

OverlapWitness make_witness(const std::vector<LitSpan>& cls, int32_t a, int32_t b) {
  if (a > b) std::swap(a, b);
  OverlapWitness w;
  w.clause_i = a + 1;
  w.clause_j = b + 1;
  w.var_of_j_inside_i =
      var_strictly_inside(cls[b], span_min_var(cls[a]), span_max_var(cls[a]));
  w.var_of_i_inside_j =
      var_strictly_inside(cls[a], span_min_var(cls[b]), span_max_var(cls[b]));
  return w;
}

int32_t distinct_var_count(LitSpan c) {
  int32_t count = 0;
  int32_t prev = 0;
  for (int32_t lit : c) {
    const int32_t v = std::abs(lit);
    if (v != prev) ++count;
    prev = v;
  }
  return count;
}

// Processes clauses in the given order, maintaining the set of variables not
// yet interior to a processed span via next-pointer splicing. Returns the
// first (killer, current) clause pair where a clause variable had already
// been consumed, i.e. killer straddles current.
std::optional<std::pair<int32_t, int32_t>> partition_walk(
    const std::vector<LitSpan>& cls, int32_t n, const std::vector<int32_t>& order) {
  std::vector<int32_t> next(static_cast<size_t>(n) + 1);
  for (int32_t x = 0; x <= n; ++x) next[x] = x + 1;
  std::vector<int32_t> killer(static_cast<size_t>(n) + 2, -1);
  for (int32_t idx : order) {
    const LitSpan c = cls[idx];
    if (c.empty()) continue;
    for (int32_t lit : c) {
      const int32_t v = std::abs(lit);
      if (killer[v] >= 0) return std::make_pair(killer[v], idx);
    }
    const int32_t l = span_min_var(c);
    const int32_t r = span_max_var(c);
    if (l < r) {
      int32_t x = next[l];
      while (x < r) {
        killer[x] = idx;
        x = next[x];
      }
      next[l] = r;
    }
  }
  return std::nullopt;
}

std::vector<int32_t> identity_order(size_t m) {
  std::vector<int32_t> order(m);
  for (size_t i = 0; i < m; ++i) order[i] = static_cast<int32_t>(i);
  return order;
}

}  // namespace

NotNestedError::NotNestedError(const OverlapWitness& w)
    : std::runtime_error("instance is not nested: " + witness_text(w)), witness(w) {}

NotOrderedError::NotOrderedError(const OrderViolation& v)
    : std::runtime_error("clause order is not straddle-respecting: " + violation_text(v)),
      violation(v) {}

std::optional<OverlapWitness> is_nested_views(const std::vector<LitSpan>& clauses) {
  const int32_t m = static_cast<int32_t>(clauses.size());
  for (int32_t i = 0; i < m; ++i) {
    if (clauses[i].empty()) continue;
    for (int32_t j = i + 1; j < m; ++j) {
      if (clauses[j].empty()) continue;
      if (overlaps(clauses[i], clauses[j])) return make_witness(clauses, i, j);
    }
  }
  return std::nullopt;
}

std::optional<OrderViolation> verify_order_views(const std::vector<LitSpan>& clauses) {
  const int32_t m = static_cast<int32_t>(clauses.size());
  for (int32_t i = 0; i < m; ++i) {
    if (clauses[i].empty()) continue;
    for (int32_t j = i + 1; j < m; ++j) {
      if (clauses[j].empty()) continue;
      if (straddles(clauses[i], clauses[j])) return OrderViolation{i + 1, j + 1};
    }
  }
  return std::nullopt;
}

std::optional<OverlapWitness> is_nested(ClauseDb& db) {
  std::vector<LitSpan> views;
  views.reserve(db.clause_count());
  for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
  auto w = is_nested_views(views);
  if (!w) db.mark_nested();
  return w;
}

std::optional<OrderViolation> verify_order(ClauseDb& db) {
  std::vector<LitSpan> views;
  views.reserve(db.clause_count());
  for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
  auto v = verify_order_views(views);
  if (!v) db.mark_ordered();
  return v;
}

std::optional<OrderViolation> verify_order_fast_views(const std::vector<LitSpan>& clauses,
                                                      int32_t var_count) {
  auto hit = partition_walk(clauses, var_count, identity_order(clauses.size()));
  if (!hit) return std::nullopt;
  return OrderViolation{hit->first + 1, hit->second + 1};
}

std::optional<OverlapWitness> is_nested_fast_views(const std::vector<LitSpan>& clauses,
                                                   int32_t var_count) {
  // In comparator order any straddle the walk trips over is mutual: a one-way
  // straddle would contradict the order (the straddled clause sorts first).
  auto hit = partition_walk(clauses, var_count, straddle_order(clauses));
  if (!hit) return std::nullopt;
  return make_witness(clauses, hit->first, hit->second);
}

std::optional<OrderViolation> verify_order_fast(ClauseDb& db) {
  std::vector<LitSpan> views;
  views.reserve(db.clause_count());
  for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
  auto v = verify_order_fast_views(views, db.var_count());
  if (!v) db.mark_ordered();
  return v;
}

std::optional<OverlapWitness> is_nested_fast(ClauseDb& db) {
  std::vector<LitSpan> views;
  views.reserve(db.clause_count());
  for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
  auto w = is_nested_fast_views(views, db.var_count());
  if (!w) db.mark_nested();
  return w;
}

std::vector<int32_t> straddle_order(const std::vector<LitSpan>& clauses) {
  const int32_t m = static_cast<int32_t>(clauses.size());
  struct Key {
    int32_t width;
    int32_t vars;
    int32_t index;
  };
  std::vector<Key> keys(m);
  for (int32_t i = 0; i < m; ++i) {
    const LitSpan c = clauses[i];
    keys[i].width = c.empty() ? -1 : span_max_var(c) - span_min_var(c);
    keys[i].vars = distinct_var_count(c);
    keys[i].index = i;
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.width != b.width) return a.width < b.width;
    if (a.vars != b.vars) return a.vars > b.vars;
    return a.index < b.index;
  });
  std::vector<int32_t> order(m);
  for (int32_t i = 0; i < m; ++i) order[i] = keys[i].index;
  return order;
}

ClauseDb sort_nested(const ClauseDb& db) {
  std::vector<LitSpan> views;
  views.reserve(db.clause_count());
  for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
  if (!db.nested_checked()) {
    if (auto w = is_nested_fast_views(views, db.var_count())) throw NotNestedError(*w);
  }
  const std::vector<int32_t> order = straddle_order(views);
  std::vector<int32_t> lit;
  lit.reserve(static_cast<size_t>(db.literal_count()));
  std::vector<int32_t> start;
  start.reserve(order.size() + 1);
  start.push_back(0);
  for (int32_t idx : order) {
    const LitSpan c = db.clause(idx);
    lit.insert(lit.end(), c.begin(), c.end());
    start.push_back(static_cast<int32_t>(lit.size()));
  }
  ClauseDb out = ClauseDb::from_parts(db.var_count(), std::move(lit), std::move(start));
  if (verify_order_fast(out)) {
    throw std::logic_error("sort_nested produced an invalid order on a nested input");
  }
  out.mark_nested();
  return out;
}

bool literal_bound_check(const ClauseDb& db) {
  return db.literal_count() <=
         2 * static_cast<int64_t>(db.clause_count()) + db.var_count();
}

bool ClauseForest::is_ancestor(int32_t a, int32_t d) const {
  for (int32_t p = parent[d]; p >= 0; p = parent[p]) {
    if (class_id[p] == class_id[a]) return true;
  }
  return false;
}

ClauseForest build_forest(const ClauseDb& db) {
  std::vector<LitSpan> views;
  views.reserve(db.clause_count());
  for (int32_t i = 0; i < db.clause_count(); ++i) views.push_back(db.clause(i));
  if (!db.nested_checked()) {
    if (auto w = is_nested_views(views)) throw NotNestedError(*w);
  }
  const int32_t m = static_cast<int32_t>(views.size());
  ClauseForest forest;
  forest.parent.assign(m, -1);
  for (int32_t j = 0; j < m; ++j) {
    int32_t best = -1;
    for (int32_t i = 0; i < m; ++i) {
      if (i == j || !strictly_straddles(views[i], views[j])) continue;
      if (best < 0) {
        best = i;
        continue;
      }
      // Candidates form a chain; the minimal one is the closest straddler.
      const int32_t wi = span_max_var(views[i]) - span_min_var(views[i]);
      const int32_t wb = span_max_var(views[best]) - span_min_var(views[best]);
      if (wi < wb || (wi == wb && distinct_var_count(views[i]) >
                                      distinct_var_count(views[best]))) {
        best = i;
      }
    }
    forest.parent[j] = best;
    if (best < 0) forest.roots.push_back(j);
  }
  forest.class_id.resize(m);
  for (int32_t i = 0; i < m; ++i) forest.class_id[i] = i;
  std::map<std::pair<int32_t, int32_t>, std::vector<int32_t>> spans;
  for (int32_t i = 0; i < m; ++i) {
    if (views[i].size() == 2) {
      spans[{span_min_var(views[i]), span_max_var(views[i])}].push_back(i);
    }
  }
  for (auto& [span, members] : spans) {
    for (int32_t member : members) forest.class_id[member] = members.front();
    forest.equivalence_groups.push_back(std::move(members));
  }
  return forest;
}

}  // namespace nsat
