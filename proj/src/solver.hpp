#ifndef NSAT_SOLVER_HPP
#define NSAT_SOLVER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace nsat {

enum class Verdict { SAT, UNSAT };

// Thrown when a clause variable is no longer a partition point, i.e. the
// input violated the ordering precondition. Detected when the scan walks past
// the clause's last variable without matching a pending literal.
struct ClauseNotInPartitionError : std::runtime_error {
  explicit ClauseNotInPartitionError(int32_t var)
      : std::runtime_error("clause variable " + std::to_string(var) +
                           " is not a partition point; clauses out of order?") {}
};

// Three-valued scan table. Entry (s,t) lives at v[(s<<1)|t], so the layout is
// (ff, ft, tf, tt). 0 = prior clauses not satisfiable(s,t); 1 = satisfiable
// without the current clause's seen prefix; 2 = satisfiable with it.
struct NewsatTable {
  std::array<uint8_t, 4> v{};

  uint8_t at(bool s, bool t) const { return v[(s ? 2 : 0) | (t ? 1 : 0)]; }
  friend bool operator==(const NewsatTable&, const NewsatTable&) = default;
};

// Table values upon arrival at each partition point x, before that point's
// upgrade/modify steps. Matches the worked-example table convention.
struct NewsatTrace {
  struct Arrival {
    int32_t x;
    NewsatTable table;
  };
  std::vector<Arrival> arrivals;
};

// DP state over variables 0..n. next[x] links the partition points (variables
// not yet interior to a processed clause); sat[x,s,t] says whether the
// processed clauses confined to the interval starting at x are satisfiable
// with endpoint literals x|s and next-point|t.
struct SolverState {
  int32_t n = 0;
  std::vector<int32_t> next;  // index 0..n; initially next[x] = x+1
  std::vector<uint8_t> sat;   // entry (x,s,t) at (x<<2)|(s<<1)|t; initially all 1
  uint64_t visited = 0;       // partition points visited across all scans

  explicit SolverState(int32_t var_count);

  uint8_t sat_at(int32_t x, bool s, bool t) const {
    return sat[(static_cast<size_t>(x) << 2) | (s ? 2u : 0u) | (t ? 1u : 0u)];
  }
  void set_sat(int32_t x, bool s, bool t, uint8_t value) {
    sat[(static_cast<size_t>(x) << 2) | (s ? 2u : 0u) | (t ? 1u : 0u)] = value;
  }

  // Live partition points 1..n in order (diagnostic).
  std::vector<int32_t> partition_points() const;
};

SolverState init_state(int32_t var_count);

// One scan of the clause across the partition, yielding the final newsat
// table. Does not commit. The clause needs >= 2 literals and all its
// variables must still be partition points.
NewsatTable compute_newsat(SolverState& state, LitSpan clause,
                           NewsatTrace* trace = nullptr);

// compute_newsat plus the commit: next[l] <- r and sat[l,s,t] <- newsat div 2.
void process_clause(SolverState& state, LitSpan clause);

// Sweep for the virtual final clause on sentinel variables {0, n+1}, both
// positive. The sentinels are special-cased here; no literal with variable 0
// ever exists. SAT iff sat[0,true,true] ends up 1.
Verdict finalize(SolverState& state);

struct SolveOptions {
  bool auto_sort = true;  // false: require straddle-respecting input order
};

struct SolveResult {
  Verdict verdict = Verdict::UNSAT;
  uint64_t visited_x = 0;
  uint64_t visit_bound = 0;  // 2(m+1) + n
};

// Full pipeline over a nested db. With auto_sort the clauses are reordered if
// needed (NotNestedError when impossible); without it an invalid order raises
// NotOrderedError. Runs in O(m+n) after ordering.
SolveResult solve(const ClauseDb& db, SolveOptions opts = {});

// Partial assignment of truth values to variables 1..n.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int32_t var_count) : val_(static_cast<size_t>(var_count) + 1, -1) {}

  int32_t var_count() const { return static_cast<int32_t>(val_.size()) - 1; }
  bool is_set(int32_t var) const { return val_[var] >= 0; }
  bool value(int32_t var) const { return val_[var] == 1; }
  void set(int32_t var, bool b) { val_[var] = b ? 1 : 0; }

  int32_t assigned_count() const;
  bool satisfies_literal(int32_t lit) const {
    const int32_t v = lit < 0 ? -lit : lit;
    return is_set(v) && value(v) == (lit > 0);
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<int8_t> val_;  // -1 unset, 0 false, 1 true
};

// Satisfying assignment for a nested db, or nullopt when UNSAT. Built by
// self-reduction: condition on each variable in turn and re-solve, keeping
// the value whose residual stays satisfiable. Variables absent from every
// residual clause default to false. Costs O(n*(m+n)).
std::optional<Assignment> extract_witness(const ClauseDb& db);

}  // namespace nsat

#endif
