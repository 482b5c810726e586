#include "model.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace nsat {

Literal literal_with_polarity(int32_t var, bool s) {
  if (var < 1) {
    throw std::domain_error("literal variable must be >= 1, got " + std::to_string(var));
  }
  return Literal{var, s};
}

Literal literal_from_int(int32_t lit) {
  if (lit == 0) throw std::domain_error("0 is not a literal");
  return Literal{lit < 0 ? -lit : lit, lit > 0};
}

LitOrder compare_literals(Literal a, Literal b) {
  if (a.var < b.var) return LitOrder::LT;
  if (a.var > b.var) return LitOrder::GT;
  return LitOrder::EQUIV;
}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  for (size_t i = 0; i < lits_.size(); ++i) {
    if (lits_[i].var < 1) {
      throw std::invalid_argument("clause literal has variable < 1");
    }
    if (i > 0 && lits_[i - 1].var >= lits_[i].var) {
      throw std::invalid_argument(
          "clause literals must be strictly increasing by variable");
    }
  }
}

Clause Clause::from_ints(std::initializer_list<int32_t> lits) {
  return from_ints(std::span<const int32_t>(lits.begin(), lits.size()));
}

Clause Clause::from_ints(std::span<const int32_t> lits) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (int32_t l : lits) out.push_back(literal_from_int(l));
  return Clause(std::move(out));
}

int32_t Clause::min_var() const {
  if (lits_.empty()) throw std::domain_error("empty clause has no span");
  return lits_.front().var;
}

int32_t Clause::max_var() const {
  if (lits_.empty()) throw std::domain_error("empty clause has no span");
  return lits_.back().var;
}

std::vector<int32_t> Clause::to_ints() const {
  std::vector<int32_t> out;
  out.reserve(lits_.size());
  for (const Literal& l : lits_) out.push_back(l.to_int());
  return out;
}

int32_t span_min_var(LitSpan c) {
  if (c.empty()) throw std::domain_error("empty clause has no span");
  return std::abs(c.front());
}

int32_t span_max_var(LitSpan c) {
  if (c.empty()) throw std::domain_error("empty clause has no span");
  return std::abs(c.back());
}

bool straddles(LitSpan c, LitSpan c2) {
  const int32_t lo = span_min_var(c);
  const int32_t hi = span_max_var(c);
  if (hi - lo < 2) return false;
  // First variable of c2 above lo; variables are sorted, so one probe decides.
  auto it = std::lower_bound(c2.begin(), c2.end(), lo + 1,
                             [](int32_t lit, int32_t v) { return std::abs(lit) < v; });
  return it != c2.end() && std::abs(*it) < hi;
}

bool straddles(const Clause& c, const Clause& c2) {
  if (c.empty() || c2.empty()) throw std::domain_error("empty clause has no span");
  const int32_t lo = c.min_var();
  const int32_t hi = c.max_var();
  if (hi - lo < 2) return false;
  auto it = std::lower_bound(c2.literals().begin(), c2.literals().end(), lo + 1,
                             [](const Literal& l, int32_t v) { return l.var < v; });
  return it != c2.literals().end() && it->var < hi;
}

bool overlaps(LitSpan c, LitSpan c2) { return straddles(c, c2) && straddles(c2, c); }
bool overlaps(const Clause& c, const Clause& c2) {
  return straddles(c, c2) && straddles(c2, c);
}

bool strictly_straddles(LitSpan c, LitSpan c2) {
  return straddles(c, c2) && !straddles(c2, c);
}
bool strictly_straddles(const Clause& c, const Clause& c2) {
  return straddles(c, c2) && !straddles(c2, c);
}

VarRange interior_variables(const Clause& c) {
  return VarRange{c.min_var() + 1, c.max_var() - 1};
}

std::span<const Literal> interior_literals(const Clause& c) {
  if (c.size() < 2) return {};
  return std::span<const Literal>(c.literals()).subspan(1, c.size() - 2);
}

ClauseDb ClauseDb::build(const std::vector<Clause>& clauses, int32_t var_count) {
  std::vector<int32_t> lit;
  std::vector<int32_t> start;
  start.reserve(clauses.size() + 1);
  start.push_back(0);
  for (size_t i = 0; i < clauses.size(); ++i) {
    const Clause& c = clauses[i];
    if (c.size() < 2) {
      throw std::invalid_argument("clause " + std::to_string(i + 1) +
                                  " has fewer than two literals; run normalize first");
    }
    if (c.max_var() > var_count) {
      throw std::domain_error("clause " + std::to_string(i + 1) + " uses variable " +
                              std::to_string(c.max_var()) + " > n = " +
                              std::to_string(var_count));
    }
    for (const Literal& l : c.literals()) lit.push_back(l.to_int());
    start.push_back(static_cast<int32_t>(lit.size()));
  }
  ClauseDb db;
  db.n_ = var_count;
  db.lit_ = std::move(lit);
  db.start_ = std::move(start);
  return db;
}

ClauseDb ClauseDb::from_parts(int32_t var_count, std::vector<int32_t> lit,
                              std::vector<int32_t> start) {
  if (start.empty() || start.front() != 0 ||
      start.back() != static_cast<int32_t>(lit.size())) {
    throw std::invalid_argument("start offsets do not cover the literal array");
  }
  for (size_t i = 0; i + 1 < start.size(); ++i) {
    if (start[i + 1] - start[i] < 2) {
      throw std::invalid_argument("clause " + std::to_string(i + 1) +
                                  " has fewer than two literals; run normalize first");
    }
    for (int32_t j = start[i]; j < start[i + 1]; ++j) {
      const int32_t v = std::abs(lit[j]);
      if (lit[j] == 0 || v > var_count) {
        throw std::domain_error("clause " + std::to_string(i + 1) +
                                " has an out-of-range literal");
      }
      if (j > start[i] && std::abs(lit[j - 1]) >= v) {
        throw std::invalid_argument("clause " + std::to_string(i + 1) +
                                    " literals not strictly increasing by variable");
      }
    }
  }
  ClauseDb db;
  db.n_ = var_count;
  db.lit_ = std::move(lit);
  db.start_ = std::move(start);
  return db;
}

Clause ClauseDb::extract_clause(int32_t i) const { return Clause::from_ints(clause(i)); }

std::vector<Clause> ClauseDb::extract_clauses() const {
  std::vector<Clause> out;
  out.reserve(clause_count());
  for (int32_t i = 0; i < clause_count(); ++i) out.push_back(extract_clause(i));
  return out;
}

std::string ClauseDb::debug_dump() const {
  std::ostringstream os;
  os << "n=" << n_ << " m=" << clause_count() << "\nlit[1.." << lit_.size() << "] =";
  for (int32_t l : lit_) os << ' ' << l;
  os << "\nstart[1.." << start_.size() << "] =";
  for (int32_t s : start_) os << ' ' << s + 1;
  os << '\n';
  return os.str();
}

ClauseDb build_db(const std::vector<Clause>& clauses, int32_t var_count) {
  return ClauseDb::build(clauses, var_count);
}

}  // namespace nsat
