#ifndef NSAT_NESTING_HPP
#define NSAT_NESTING_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace nsat {

// Proof that two clauses overlap: each straddles the other.
struct OverlapWitness {
  int32_t clause_i = 0;        // 1-based, clause_i < clause_j
  int32_t clause_j = 0;
  int32_t var_of_j_inside_i = 0;  // variable of clause j strictly inside clause i's span
  int32_t var_of_i_inside_j = 0;  // variable of clause i strictly inside clause j's span
};

// Proof that a clause order is not straddle-respecting: the earlier clause
// straddles the later one.
struct OrderViolation {
  int32_t earlier = 0;  // 1-based
  int32_t later = 0;
};

struct NotNestedError : std::runtime_error {
  OverlapWitness witness;
  explicit NotNestedError(const OverlapWitness& w);
};

struct NotOrderedError : std::runtime_error {
  OrderViolation violation;
  explicit NotOrderedError(const OrderViolation& v);
};

// Pairwise definition checks, O(m^2) with early exit. These are the reference
// implementations; the *_fast variants below must agree with them.
// A nullopt result means the property holds and the db flag gets set.
std::optional<OverlapWitness> is_nested(ClauseDb& db);
std::optional<OrderViolation> verify_order(ClauseDb& db);

// View-level versions for clause sets that are not yet db-conforming
// (units, tautological pairs). Variables within each view must be sorted.
std::optional<OverlapWitness> is_nested_views(const std::vector<LitSpan>& clauses);
std::optional<OrderViolation> verify_order_views(const std::vector<LitSpan>& clauses);

// Partition-walk checks: O(L + n) for order verification, plus an O(m log m)
// comparator sort for the nestedness test. Same verdicts as the pairwise
// scans; a returned witness is always a genuine violation, though not
// necessarily the same pair the pairwise scan reports first.
std::optional<OrderViolation> verify_order_fast(ClauseDb& db);
std::optional<OverlapWitness> is_nested_fast(ClauseDb& db);
std::optional<OrderViolation> verify_order_fast_views(const std::vector<LitSpan>& clauses,
                                                      int32_t var_count);
std::optional<OverlapWitness> is_nested_fast_views(const std::vector<LitSpan>& clauses,
                                                   int32_t var_count);

// Straddle-respecting permutation: span width ascending, then distinct
// variable count descending, then original position. For a nested set the
// resulting order places every clause after every clause it straddles.
std::vector<int32_t> straddle_order(const std::vector<LitSpan>& clauses);

// Reorders a nested db into straddle-respecting order (deterministic, stable).
// Throws NotNestedError otherwise. The output has its ordered/nested flags set
// after an actual verification pass.
ClauseDb sort_nested(const ClauseDb& db);

// Total literal count bound for nested sets: L <= 2m + n.
bool literal_bound_check(const ClauseDb& db);

// The hierarchy induced by strict straddling on a nested set. parent[i] is
// the minimal strict straddler of clause i (0-based, -1 for roots); 2-literal
// clauses sharing a span are grouped as equivalent. The hierarchy's nodes are
// really the equivalence classes: is_ancestor answers up to equivalence,
// which makes it coincide with the strict-straddle relation.
struct ClauseForest {
  std::vector<int32_t> parent;
  std::vector<int32_t> class_id;  // shared by equivalent 2-literal clauses
  std::vector<int32_t> roots;
  std::vector<std::vector<int32_t>> equivalence_groups;

  bool is_ancestor(int32_t a, int32_t d) const;
};

ClauseForest build_forest(const ClauseDb& db);  // throws NotNestedError

}  // namespace nsat

#endif
