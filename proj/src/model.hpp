#ifndef NSAT_MODEL_HPP
#define NSAT_MODEL_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsat {

// Literals are signed integers externally: -x is the negation of variable x.
// Variable 0 is reserved (the solver's sentinel sweep uses it internally and
// never materializes it as a Literal).
struct Literal {
  int32_t var = 0;  // >= 1
  bool positive = true;

  int32_t to_int() const { return positive ? var : -var; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

// The x|s polarity map: +x when s is true, -x when s is false.
// Throws std::domain_error for var < 1.
Literal literal_with_polarity(int32_t var, bool s);

// Decodes a nonzero signed integer. Throws std::domain_error on 0.
Literal literal_from_int(int32_t lit);

// Literals are preordered by their variable alone; signs are disregarded,
// so x and -x compare EQUIV.
enum class LitOrder { LT, EQUIV, GT };

LitOrder compare_literals(Literal a, Literal b);

// A clause: a set of literals on distinct variables, stored in increasing
// variable order. Construction validates both properties.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> lits);  // throws std::invalid_argument

  static Clause from_ints(std::initializer_list<int32_t> lits);
  static Clause from_ints(std::span<const int32_t> lits);

  const std::vector<Literal>& literals() const { return lits_; }
  int32_t size() const { return static_cast<int32_t>(lits_.size()); }
  bool empty() const { return lits_.empty(); }

  // Span endpoints. Throw std::domain_error on an empty clause.
  int32_t min_var() const;
  int32_t max_var() const;

  std::vector<int32_t> to_ints() const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> lits_;
};

// Clause payload as flat signed literals, ordered by variable. Raw inputs may
// repeat a variable (x alongside -x); the predicates below only look at the
// variable sequence, which must be non-decreasing.
using LitSpan = std::span<const int32_t>;

int32_t span_min_var(LitSpan c);  // throws std::domain_error on empty
int32_t span_max_var(LitSpan c);

// C straddles C2 when some variable of C2 lies strictly between C's least
// and greatest variables. The extremal literals of C witness the definitional
// existential over literal triples, so the span test is equivalent.
bool straddles(LitSpan c, LitSpan c2);
bool straddles(const Clause& c, const Clause& c2);

// Mutual straddling.
bool overlaps(LitSpan c, LitSpan c2);
bool overlaps(const Clause& c, const Clause& c2);

// C > C2 in the hierarchy sense: C straddles C2 but not conversely.
bool strictly_straddles(LitSpan c, LitSpan c2);
bool strictly_straddles(const Clause& c, const Clause& c2);

// The open variable interval between a clause's span endpoints. Contains
// variables whether or not they occur in the clause.
struct VarRange {
  int32_t first = 1;  // inclusive
  int32_t last = 0;   // inclusive; empty when last < first

  bool empty() const { return last < first; }
  int32_t count() const { return empty() ? 0 : last - first + 1; }
  bool contains(int32_t v) const { return v >= first && v <= last; }
  friend bool operator==(const VarRange&, const VarRange&) = default;
};

VarRange interior_variables(const Clause& c);  // throws std::domain_error on empty

// All literals of the clause except the first and last.
std::span<const Literal> interior_literals(const Clause& c);

// Flat clause storage: lit[] holds every literal, clause i occupying
// lit[start[i] .. start[i+1]). Offsets are 0-based in memory; diagnostics and
// the debug dump use the conventional 1-based clause numbering.
//
// The ordered/nested flags record that the corresponding check has actually
// run on this exact clause sequence; they start out unset.
class ClauseDb {
 public:
  ClauseDb() : start_{0} {}

  // Packs validated clauses. Every clause needs at least two literals
  // (normalize shorter input first) and no variable may exceed var_count.
  static ClauseDb build(const std::vector<Clause>& clauses, int32_t var_count);

  // Adopts flat arrays directly (0-based offsets). Validates the same
  // invariants as build.
  static ClauseDb from_parts(int32_t var_count, std::vector<int32_t> lit,
                             std::vector<int32_t> start);

  int32_t var_count() const { return n_; }
  int32_t clause_count() const { return static_cast<int32_t>(start_.size()) - 1; }
  int64_t literal_count() const { return static_cast<int64_t>(lit_.size()); }

  LitSpan clause(int32_t i) const {
    return LitSpan(lit_.data() + start_[i], lit_.data() + start_[i + 1]);
  }

  Clause extract_clause(int32_t i) const;
  std::vector<Clause> extract_clauses() const;

  bool ordered_checked() const { return ordered_; }
  bool nested_checked() const { return nested_; }
  void mark_ordered() { ordered_ = true; }
  void mark_nested() { nested_ = true; }

  // lit/start arrays with 1-based offsets, for logs and tests.
  std::string debug_dump() const;

  friend bool operator==(const ClauseDb& a, const ClauseDb& b) {
    return a.n_ == b.n_ && a.lit_ == b.lit_ && a.start_ == b.start_;
  }

 private:
  int32_t n_ = 0;
  std::vector<int32_t> lit_;
  std::vector<int32_t> start_;  // clause_count()+1 offsets, start_[0] == 0
  bool ordered_ = false;
  bool nested_ = false;
};

ClauseDb build_db(const std::vector<Clause>& clauses, int32_t var_count);

}  // namespace nsat

#endif
