#ifndef NSAT_PREP_HPP
#define NSAT_PREP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"
#include "solver.hpp"

namespace nsat {

// Clauses as read from input: literal order preserved, duplicates and
// complementary pairs still present. Literals are nonzero with |lit| <= n.
struct RawClauseSet {
  int32_t n = 0;
  std::vector<std::vector<int32_t>> clauses;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

struct ParseResult {
  RawClauseSet set;
  std::vector<std::string> warnings;
};

// DIMACS CNF: 'c' comment lines, a "p cnf <n> <m>" header, then clauses as
// whitespace-separated nonzero integers terminated by 0 (may span lines).
// The header's clause count is advisory; a mismatch produces a warning.
ParseResult parse_dimacs(std::string_view text);

enum class InstanceStatus { OPEN, TRIVIALLY_SAT, TRIVIALLY_UNSAT };

// Result of normalization: a db whose clauses all have >= 2 literals and
// mention no forced variable, plus the values unit propagation pinned down.
struct NormalizedInstance {
  ClauseDb db;
  Assignment forced;
  InstanceStatus status = InstanceStatus::OPEN;
};

// Per clause: sort by variable, drop duplicate literals, drop tautologies
// (clauses with x and -x, which any full assignment intersects). An empty
// clause makes the instance TRIVIALLY_UNSAT. Unit clauses propagate to
// fixpoint; a propagation conflict is TRIVIALLY_UNSAT, and an instance with
// no clauses left is TRIVIALLY_SAT. Clause order is preserved for survivors.
NormalizedInstance normalize(const RawClauseSet& raw);

// Fixes one variable: clauses containing var|value are removed, the opposite
// literal is deleted from the rest, and the result is renormalized.
NormalizedInstance condition(const ClauseDb& db, int32_t var, bool value);

// Canonical DIMACS text: header, one clause per line, literals sorted by
// variable, zero-terminated. parse_dimacs(emit_dimacs(x)) is the identity on
// normalized instances.
std::string emit_dimacs(const ClauseDb& db);
std::string emit_dimacs(const RawClauseSet& raw);

// Sorts a clause by variable and removes exact duplicate literals. Units and
// tautological pairs survive; normalize deals with those.
std::vector<int32_t> canonical_literals(std::vector<int32_t> clause);

struct GeneratorConfig {
  int32_t vars = 0;
  int32_t clauses = 0;
  int32_t max_width = 8;       // literals per clause, >= 2
  double interior_prob = 0.5;  // chance an available interior variable joins a clause
  double negate_prob = 0.5;
  uint64_t seed = 0;
};

// Random nested instance: a random interval forest over 1..n where each node
// becomes a clause on its span endpoints plus some interior variables no
// other clause uses as interior literals. Clauses are emitted children-first,
// which is straddle-respecting. Deterministic in cfg.seed. The output has its
// ordered/nested flags set after verification and satisfies L <= 2m+n.
//
// When the target clause count is unreachable (fewer than two variables) the
// db simply contains fewer clauses; callers report the shortfall.
ClauseDb generate_nested(const GeneratorConfig& cfg);

}  // namespace nsat

#endif
