#ifndef NSAT_TEST_UTIL_HPP
#define NSAT_TEST_UTIL_HPP

#include <algorithm>
#include <vector>

#include "model.hpp"
#include "rng.hpp"

namespace nsat::test {

// Arbitrary random clause on 1..max_var with 2..max_width distinct variables.
// Not nested in general; property tests over raw clause space use this.
inline Clause random_clause(Rng& rng, int32_t max_var, int32_t max_width = 5) {
  const int32_t width = rng.range(2, std::min(max_var, max_width));
  std::vector<int32_t> vars;
  while (static_cast<int32_t>(vars.size()) < width) {
    const int32_t v = rng.range(1, max_var);
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  std::vector<int32_t> lits;
  lits.reserve(vars.size());
  for (int32_t v : vars) lits.push_back(rng.chance(0.5) ? -v : v);
  return Clause::from_ints(std::span<const int32_t>(lits.data(), lits.size()));
}

// The definitional straddle test: literals sigma, tau in c and xi in c2 with
// sigma < xi < tau under the sign-disregarding preorder. Kept as the oracle
// for the span-based implementation.
inline bool naive_straddles(const Clause& c, const Clause& c2) {
  for (const Literal& sigma : c.literals()) {
    for (const Literal& tau : c.literals()) {
      for (const Literal& xi : c2.literals()) {
        if (sigma.var < xi.var && xi.var < tau.var) return true;
      }
    }
  }
  return false;
}

inline ClauseDb make_db(std::initializer_list<std::initializer_list<int32_t>> cls,
                        int32_t n) {
  std::vector<Clause> clauses;
  for (const auto& c : cls) clauses.push_back(Clause::from_ints(c));
  return build_db(clauses, n);
}

// Five clauses over {a,b,c} -> {1,2,3}: a small classic with exactly one
// overlapping pair and exactly two models.
inline ClauseDb intro_example() {
  return make_db({{1, -2, 3}, {-1, -3}, {-1, 2, 3}, {-1, -3}, {1, 2}}, 3);
}

}  // namespace nsat::test

#endif
