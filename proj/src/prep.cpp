#include "prep.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "nesting.hpp"
#include "rng.hpp"

namespace nsat {

namespace {

bool parse_int(std::string_view tok, int64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

ParseResult parse_dimacs(std::string_view text) {
  ParseResult result;
  RawClauseSet& set = result.set;
  bool header_seen = false;
  int64_t declared_m = 0;
  std::vector<int32_t> current;
  int line_no = 0;
  int last_content_line = 1;

  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == 'c') continue;

    if (!header_seen) {
      if (toks[0] != "p") throw ParseError(line_no, "expected 'p cnf <n> <m>' header");
      int64_t n = 0;
      if (toks.size() != 4 || toks[1] != "cnf" || !parse_int(toks[2], n) ||
          !parse_int(toks[3], declared_m) || n < 0 || declared_m < 0 ||
          n > INT32_MAX) {
        throw ParseError(line_no, "malformed 'p cnf' header");
      }
      set.n = static_cast<int32_t>(n);
      header_seen = true;
      continue;
    }

    for (std::string_view tok : toks) {
      int64_t lit = 0;
      if (!parse_int(tok, lit)) {
        throw ParseError(line_no, "unexpected token '" + std::string(tok) + "'");
      }
      last_content_line = line_no;
      if (lit == 0) {
        set.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (lit > set.n || lit < -static_cast<int64_t>(set.n)) {
          throw ParseError(line_no, "literal " + std::string(tok) +
                                        " out of range for n = " + std::to_string(set.n));
        }
        current.push_back(static_cast<int32_t>(lit));
      }
    }
  }

  if (!header_seen) throw ParseError(1, "missing 'p cnf' header");
  if (!current.empty()) {
    throw ParseError(last_content_line, "unterminated clause (missing trailing 0)");
  }
  if (declared_m != static_cast<int64_t>(set.clauses.size())) {
    result.warnings.push_back("header declares " + std::to_string(declared_m) +
                              " clauses but " + std::to_string(set.clauses.size()) +
                              " were found; using the actual count");
  }
  return result;
}

namespace {

enum class ClauseKind { KEEP, TAUTOLOGY, EMPTY };

ClauseKind canonicalize(std::vector<int32_t>& c) {
  c = canonical_literals(std::move(c));
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    if (std::abs(c[i]) == std::abs(c[i + 1])) return ClauseKind::TAUTOLOGY;
  }
  return c.empty() ? ClauseKind::EMPTY : ClauseKind::KEEP;
}

NormalizedInstance normalize_canonical(std::vector<std::vector<int32_t>> cls, int32_t n) {
  NormalizedInstance out;
  out.forced = Assignment(n);

  bool conflict = false;
  for (;;) {
    // Pull out unit clauses.
    bool new_units = false;
    std::vector<std::vector<int32_t>> rest;
    rest.reserve(cls.size());
    for (auto& c : cls) {
      if (c.size() == 1) {
        const int32_t v = std::abs(c[0]);
        const bool val = c[0] > 0;
        if (out.forced.is_set(v)) {
          if (out.forced.value(v) != val) {
            conflict = true;
            break;
          }
        } else {
          out.forced.set(v, val);
          new_units = true;
        }
      } else {
        rest.push_back(std::move(c));
      }
    }
    cls = std::move(rest);
    if (conflict || !new_units) break;

    // Apply the forced values: drop satisfied clauses, delete false literals.
    std::vector<std::vector<int32_t>> swept;
    swept.reserve(cls.size());
    for (auto& c : cls) {
      bool satisfied = false;
      std::vector<int32_t> kept;
      kept.reserve(c.size());
      for (int32_t lit : c) {
        const int32_t v = std::abs(lit);
        if (!out.forced.is_set(v)) {
          kept.push_back(lit);
        } else if (out.forced.value(v) == (lit > 0)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (kept.empty()) {
        conflict = true;
        break;
      }
      swept.push_back(std::move(kept));
    }
    cls = std::move(swept);
    if (conflict) break;
  }

  if (conflict) {
    out.status = InstanceStatus::TRIVIALLY_UNSAT;
    return out;
  }

  std::vector<int32_t> lit;
  std::vector<int32_t> start{0};
  for (const auto& c : cls) {
    lit.insert(lit.end(), c.begin(), c.end());
    start.push_back(static_cast<int32_t>(lit.size()));
  }
  out.db = ClauseDb::from_parts(n, std::move(lit), std::move(start));
  out.status = out.db.clause_count() == 0 ? InstanceStatus::TRIVIALLY_SAT
                                          : InstanceStatus::OPEN;
  return out;
}

}  // namespace

NormalizedInstance normalize(const RawClauseSet& raw) {
  std::vector<std::vector<int32_t>> cls;
  cls.reserve(raw.clauses.size());
  for (const auto& rc : raw.clauses) {
    std::vector<int32_t> c = rc;
    switch (canonicalize(c)) {
      case ClauseKind::TAUTOLOGY:
        break;  // intersected by every full assignment
      case ClauseKind::EMPTY: {
        NormalizedInstance out;
        out.forced = Assignment(raw.n);
        out.status = InstanceStatus::TRIVIALLY_UNSAT;
        return out;
      }
      case ClauseKind::KEEP:
        cls.push_back(std::move(c));
        break;
    }
  }
  return normalize_canonical(std::move(cls), raw.n);
}

NormalizedInstance condition(const ClauseDb& db, int32_t var, bool value) {
  const int32_t satisfied_lit = value ? var : -var;
  std::vector<std::vector<int32_t>> cls;
  cls.reserve(db.clause_count());
  for (int32_t i = 0; i < db.clause_count(); ++i) {
    const LitSpan c = db.clause(i);
    if (std::find(c.begin(), c.end(), satisfied_lit) != c.end()) continue;
    std::vector<int32_t> kept;
    kept.reserve(c.size());
    for (int32_t lit : c) {
      if (lit != -satisfied_lit) kept.push_back(lit);
    }
    cls.push_back(std::move(kept));
  }
  return normalize_canonical(std::move(cls), db.var_count());
}

namespace {

void emit_clause_line(std::string& out, std::vector<int32_t> lits) {
  std::sort(lits.begin(), lits.end(), [](int32_t a, int32_t b) {
    const int32_t va = std::abs(a), vb = std::abs(b);
    return va != vb ? va < vb : a < b;
  });
  for (int32_t lit : lits) {
    out += std::to_string(lit);
    out += ' ';
  }
  out += "0\n";
}

}  // namespace

std::string emit_dimacs(const ClauseDb& db) {
  std::string out = "p cnf " + std::to_string(db.var_count()) + ' ' +
                    std::to_string(db.clause_count()) + '\n';
  for (int32_t i = 0; i < db.clause_count(); ++i) {
    const LitSpan c = db.clause(i);
    for (int32_t lit : c) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::string emit_dimacs(const RawClauseSet& raw) {
  std::string out = "p cnf " + std::to_string(raw.n) + ' ' +
                    std::to_string(raw.clauses.size()) + '\n';
  for (const auto& c : raw.clauses) emit_clause_line(out, c);
  return out;
}

std::vector<int32_t> canonical_literals(std::vector<int32_t> clause) {
  std::sort(clause.begin(), clause.end(), [](int32_t a, int32_t b) {
    const int32_t va = std::abs(a), vb = std::abs(b);
    return va != vb ? va < vb : a < b;
  });
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  return clause;
}

namespace {

struct GenNode {
  int32_t lo, hi;
  int32_t first_child = -1;
  int32_t last_child = -1;
  int32_t next_sib = -1;
};

constexpr double kSameSpanProb = 0.08;
constexpr double kChildProb = 0.8;

}  // namespace

ClauseDb generate_nested(const GeneratorConfig& cfg) {
  if (cfg.vars < 0 || cfg.clauses < 0) {
    throw std::invalid_argument("generator needs vars >= 0 and clauses >= 0");
  }
  if (cfg.max_width < 2) {
    throw std::invalid_argument("generator max_width must be >= 2");
  }
  if (cfg.interior_prob < 0.0 || cfg.interior_prob > 1.0 || cfg.negate_prob < 0.0 ||
      cfg.negate_prob > 1.0) {
    throw std::invalid_argument("generator probabilities must lie in [0,1]");
  }

  const int32_t n = cfg.vars;
  Rng rng(cfg.seed);
  int64_t budget = cfg.clauses;
  std::vector<GenNode> nodes;
  std::vector<int32_t> roots;

  const auto attach = [&](int32_t parent, int32_t child) {
    if (parent < 0) {
      roots.push_back(child);
      return;
    }
    GenNode& p = nodes[parent];
    if (p.first_child < 0) {
      p.first_child = child;
    } else {
      nodes[p.last_child].next_sib = child;
    }
    p.last_child = child;
  };

  if (n >= 2 && budget > 0) {
    // Each task fills the span [lo, hi] with children of `parent` (-1 for the
    // top level). Iterative so deep forests cannot overflow the stack.
    struct Task {
      int32_t lo, hi, parent;
    };
    std::vector<Task> stack;
    stack.push_back({1, n, -1});
    while (!stack.empty() && budget > 0) {
      const Task t = stack.back();
      stack.pop_back();
      const int32_t width = t.hi - t.lo;
      if (width < 1) continue;

      if (t.parent >= 0 && rng.chance(kSameSpanProb)) {
        // A single child on the parent's full span. The parent keeps no
        // interior variables, so equivalent 2-literal clauses arise here.
        const int32_t child = static_cast<int32_t>(nodes.size());
        nodes.push_back({t.lo, t.hi});
        --budget;
        attach(t.parent, child);
        stack.push_back({t.lo, t.hi, child});
        continue;
      }
      if (width == 1) continue;

      // Split the span into segments sharing endpoints; each segment may
      // become a child whose subtree is filled later.
      const int32_t base = 1 + static_cast<int32_t>(
                                   rng.below(static_cast<uint32_t>(std::min(width, 8))));
      int32_t c = t.lo;
      while (c < t.hi && budget > 0) {
        const int32_t remaining = t.hi - c;
        int32_t seg = 1 + static_cast<int32_t>(rng.below(static_cast<uint32_t>(2 * base)));
        seg = std::min(seg, remaining);
        if (rng.chance(kChildProb)) {
          const int32_t child = static_cast<int32_t>(nodes.size());
          nodes.push_back({c, c + seg});
          --budget;
          attach(t.parent, child);
          stack.push_back({c, c + seg, child});
        }
        c += seg;
      }
    }
  }

  // Emit children before parents; a parent straddles everything below it.
  std::vector<int32_t> lit;
  std::vector<int32_t> start{0};
  std::vector<int32_t> extras;
  const int32_t max_extras = cfg.max_width - 2;

  const auto push_lit = [&](int32_t var) {
    lit.push_back(rng.chance(cfg.negate_prob) ? -var : var);
  };
  const auto emit_node = [&](const GenNode& node) {
    extras.clear();
    // Interior variables still available to this node: everything strictly
    // inside its span except the interiors of its children. These pools are
    // disjoint across the whole forest, which is what keeps the instance
    // nested and within the 2m+n literal bound.
    int32_t cursor = node.lo + 1;
    for (int32_t ci = node.first_child; ci >= 0; ci = nodes[ci].next_sib) {
      const GenNode& child = nodes[ci];
      for (int32_t v = cursor; v <= std::min(child.lo, node.hi - 1); ++v) {
        if (static_cast<int32_t>(extras.size()) >= max_extras) break;
        if (rng.chance(cfg.interior_prob)) extras.push_back(v);
      }
      cursor = std::max(cursor, child.hi);
    }
    for (int32_t v = cursor; v <= node.hi - 1; ++v) {
      if (static_cast<int32_t>(extras.size()) >= max_extras) break;
      if (rng.chance(cfg.interior_prob)) extras.push_back(v);
    }
    push_lit(node.lo);
    for (int32_t v : extras) push_lit(v);
    push_lit(node.hi);
    start.push_back(static_cast<int32_t>(lit.size()));
  };

  // Post-order walk with an explicit stack.
  struct Frame {
    int32_t node;
    int32_t next_child;
  };
  std::vector<Frame> walk;
  for (int32_t root : roots) {
    walk.push_back({root, nodes[root].first_child});
    while (!walk.empty()) {
      Frame& f = walk.back();
      if (f.next_child >= 0) {
        const int32_t child = f.next_child;
        f.next_child = nodes[child].next_sib;
        walk.push_back({child, nodes[child].first_child});
      } else {
        emit_node(nodes[f.node]);
        walk.pop_back();
      }
    }
  }

  // Top up with full-span 2-literal clauses; appended last they straddle
  // nothing yet to come, so the order stays valid.
  if (n >= 2) {
    while (budget > 0) {
      push_lit(1);
      push_lit(n);
      start.push_back(static_cast<int32_t>(lit.size()));
      --budget;
    }
  }

  ClauseDb db = ClauseDb::from_parts(n, std::move(lit), std::move(start));
  if (verify_order_fast(db)) {
    throw std::logic_error("generator produced an out-of-order instance");
  }
  db.mark_nested();  // a straddle-respecting order implies pairwise non-overlap
  if (!literal_bound_check(db)) {
    throw std::logic_error("generator exceeded the 2m+n literal bound");
  }
  return db;
}

}  // namespace nsat
