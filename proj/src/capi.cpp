#include "nestedsat.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "harness.hpp"
#include "model.hpp"
#include "nesting.hpp"
#include "prep.hpp"
#include "solver.hpp"

struct nsat_instance {
  nsat::RawClauseSet raw;
  std::string warnings;  // newline-joined parser notes
};

namespace {

thread_local std::string g_last_error;

nsat_status fail(nsat_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs a body and maps the library's exceptions onto status codes.
template <typename Fn>
nsat_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const nsat::ParseError& e) {
    return fail(NSAT_ERR_PARSE, e.what());
  } catch (const nsat::NotNestedError& e) {
    return fail(NSAT_ERR_NOT_NESTED, e.what());
  } catch (const nsat::NotOrderedError& e) {
    return fail(NSAT_ERR_NOT_ORDERED, e.what());
  } catch (const nsat::OracleLimitError& e) {
    return fail(NSAT_ERR_LIMIT, e.what());
  } catch (const std::domain_error& e) {
    return fail(NSAT_ERR_INVALID_ARG, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NSAT_ERR_INVALID_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(NSAT_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string join_warnings(const std::vector<std::string>& warnings) {
  std::string out;
  for (size_t i = 0; i < warnings.size(); ++i) {
    if (i) out += '\n';
    out += warnings[i];
  }
  return out;
}

// Clause list with per-clause variable-sorted literals, for the structural
// checks, which accept units and tautological pairs as written.
std::vector<std::vector<int32_t>> canonical_clauses(const nsat::RawClauseSet& raw) {
  std::vector<std::vector<int32_t>> out;
  out.reserve(raw.clauses.size());
  for (const auto& c : raw.clauses) out.push_back(nsat::canonical_literals(c));
  return out;
}

std::vector<nsat::LitSpan> views_of(const std::vector<std::vector<int32_t>>& cls) {
  std::vector<nsat::LitSpan> views;
  views.reserve(cls.size());
  for (const auto& c : cls) views.emplace_back(c.data(), c.size());
  return views;
}

int to_verdict_code(nsat::Verdict v) {
  return v == nsat::Verdict::SAT ? NSAT_SATISFIABLE : NSAT_UNSATISFIABLE;
}

// Shared solve pipeline: normalize, order-check or sort, run the DP. With a
// non-null witness the SAT path extracts an assignment, merges the forced
// values over it and validates against the original clauses.
nsat::Verdict run_solve(const nsat_instance* inst, uint32_t flags,
                        nsat_solve_stats* stats, nsat::Assignment* witness) {
  if (stats) *stats = nsat_solve_stats{0, 0};
  nsat::NormalizedInstance norm = nsat::normalize(inst->raw);
  const int32_t n = inst->raw.n;

  nsat::Verdict verdict;
  if (norm.status == nsat::InstanceStatus::TRIVIALLY_UNSAT) {
    verdict = nsat::Verdict::UNSAT;
  } else if (norm.status == nsat::InstanceStatus::TRIVIALLY_SAT) {
    verdict = nsat::Verdict::SAT;
  } else {
    const nsat::SolveOptions opts{.auto_sort = (flags & NSAT_SOLVE_NO_SORT) == 0};
    const nsat::SolveResult r = nsat::solve(norm.db, opts);
    if (stats) *stats = nsat_solve_stats{r.visited_x, r.visit_bound};
    verdict = r.verdict;
  }

  if (witness && verdict == nsat::Verdict::SAT) {
    nsat::Assignment merged(n);
    if (norm.status == nsat::InstanceStatus::OPEN) {
      auto extracted = nsat::extract_witness(norm.db);
      if (!extracted) throw std::logic_error("witness extraction disagreed with solve");
      merged = *extracted;
    }
    for (int32_t v = 1; v <= n; ++v) {
      if (norm.forced.is_set(v)) merged.set(v, norm.forced.value(v));
      if (!merged.is_set(v)) merged.set(v, false);
    }
    if (!nsat::check_witness(inst->raw, merged)) {
      throw std::logic_error("extracted witness failed validation");
    }
    *witness = std::move(merged);
  }
  return verdict;
}

}  // namespace

extern "C" {

const char* nsat_version(void) { return "1.0.0"; }

const char* nsat_last_error(void) { return g_last_error.c_str(); }

nsat_status nsat_instance_new(int32_t var_count, nsat_instance** out) {
  if (!out) return fail(NSAT_ERR_INVALID_ARG, "out pointer is NULL");
  if (var_count < 0) return fail(NSAT_ERR_INVALID_ARG, "var_count must be >= 0");
  return guarded([&]() {
    auto* inst = new nsat_instance;
    inst->raw.n = var_count;
    *out = inst;
    return NSAT_OK;
  });
}

nsat_status nsat_instance_parse_dimacs(const char* text, nsat_instance** out) {
  if (!text || !out) return fail(NSAT_ERR_INVALID_ARG, "NULL argument");
  return guarded([&]() {
    nsat::ParseResult parsed = nsat::parse_dimacs(text);
    auto* inst = new nsat_instance;
    inst->raw = std::move(parsed.set);
    inst->warnings = join_warnings(parsed.warnings);
    *out = inst;
    return NSAT_OK;
  });
}

void nsat_instance_free(nsat_instance* inst) { delete inst; }

nsat_status nsat_instance_add_clause(nsat_instance* inst, const int32_t* lits,
                                     int32_t len) {
  if (!inst || (len > 0 && !lits) || len < 0) {
    return fail(NSAT_ERR_INVALID_ARG, "bad clause arguments");
  }
  for (int32_t i = 0; i < len; ++i) {
    if (lits[i] == 0 || lits[i] > inst->raw.n || lits[i] < -inst->raw.n) {
      return fail(NSAT_ERR_INVALID_ARG,
                  "literal " + std::to_string(lits[i]) + " out of range for n = " +
                      std::to_string(inst->raw.n));
    }
  }
  return guarded([&]() {
    inst->raw.clauses.emplace_back(lits, lits + len);
    return NSAT_OK;
  });
}

int32_t nsat_instance_var_count(const nsat_instance* inst) {
  return inst ? inst->raw.n : 0;
}

int32_t nsat_instance_clause_count(const nsat_instance* inst) {
  return inst ? static_cast<int32_t>(inst->raw.clauses.size()) : 0;
}

const char* nsat_instance_warnings(const nsat_instance* inst) {
  return inst ? inst->warnings.c_str() : "";
}

nsat_status nsat_instance_emit_dimacs(const nsat_instance* inst, char** text_out) {
  if (!inst || !text_out) return fail(NSAT_ERR_INVALID_ARG, "NULL argument");
  return guarded([&]() {
    *text_out = copy_string(nsat::emit_dimacs(inst->raw));
    return *text_out ? NSAT_OK : fail(NSAT_ERR_INTERNAL, "allocation failed");
  });
}

void nsat_string_free(char* text) { std::free(text); }

nsat_status nsat_instance_check(const nsat_instance* inst, int* nested_out,
                                int* ordered_out, int32_t overlap_pair_out[2],
                                int32_t overlap_vars_out[2]) {
  if (!inst) return fail(NSAT_ERR_INVALID_ARG, "NULL instance");
  return guarded([&]() {
    const auto canon = canonical_clauses(inst->raw);
    const auto views = views_of(canon);
    const auto overlap = nsat::is_nested_fast_views(views, inst->raw.n);
    const auto violation = nsat::verify_order_fast_views(views, inst->raw.n);
    if (nested_out) *nested_out = overlap ? 0 : 1;
    if (ordered_out) *ordered_out = violation ? 0 : 1;
    if (overlap) {
      if (overlap_pair_out) {
        overlap_pair_out[0] = overlap->clause_i;
        overlap_pair_out[1] = overlap->clause_j;
      }
      if (overlap_vars_out) {
        overlap_vars_out[0] = overlap->var_of_j_inside_i;
        overlap_vars_out[1] = overlap->var_of_i_inside_j;
      }
      g_last_error = nsat::NotNestedError(*overlap).what();
    }
    return NSAT_OK;
  });
}

nsat_status nsat_instance_sort(const nsat_instance* inst, nsat_instance** sorted_out) {
  if (!inst || !sorted_out) return fail(NSAT_ERR_INVALID_ARG, "NULL argument");
  return guarded([&]() {
    auto canon = canonical_clauses(inst->raw);
    const auto views = views_of(canon);
    if (auto overlap = nsat::is_nested_fast_views(views, inst->raw.n)) {
      throw nsat::NotNestedError(*overlap);
    }
    const std::vector<int32_t> order = nsat::straddle_order(views);
    auto* out = new nsat_instance;
    out->raw.n = inst->raw.n;
    out->raw.clauses.reserve(canon.size());
    for (int32_t idx : order) out->raw.clauses.push_back(std::move(canon[idx]));
    *sorted_out = out;
    return NSAT_OK;
  });
}

nsat_status nsat_instance_solve(const nsat_instance* inst, uint32_t flags,
                                int* verdict_out, nsat_solve_stats* stats_out) {
  if (!inst || !verdict_out) return fail(NSAT_ERR_INVALID_ARG, "NULL argument");
  return guarded([&]() {
    *verdict_out = to_verdict_code(run_solve(inst, flags, stats_out, nullptr));
    return NSAT_OK;
  });
}

nsat_status nsat_instance_solve_witness(const nsat_instance* inst, uint32_t flags,
                                        int* verdict_out, uint8_t* values_out) {
  if (!inst || !verdict_out || !values_out) {
    return fail(NSAT_ERR_INVALID_ARG, "NULL argument");
  }
  return guarded([&]() {
    nsat::Assignment witness;
    const nsat::Verdict verdict = run_solve(inst, flags, nullptr, &witness);
    *verdict_out = to_verdict_code(verdict);
    if (verdict == nsat::Verdict::SAT) {
      for (int32_t v = 1; v <= inst->raw.n; ++v) {
        values_out[v - 1] = witness.value(v) ? 1 : 0;
      }
    }
    return NSAT_OK;
  });
}

nsat_status nsat_generate(int32_t vars, int32_t clauses, int32_t max_width,
                          double interior_prob, double negate_prob, uint64_t seed,
                          nsat_instance** out) {
  if (!out) return fail(NSAT_ERR_INVALID_ARG, "out pointer is NULL");
  return guarded([&]() {
    nsat::GeneratorConfig cfg;
    cfg.vars = vars;
    cfg.clauses = clauses;
    cfg.max_width = max_width;
    cfg.interior_prob = interior_prob;
    cfg.negate_prob = negate_prob;
    cfg.seed = seed;
    const nsat::ClauseDb db = nsat::generate_nested(cfg);
    auto* inst = new nsat_instance;
    inst->raw.n = db.var_count();
    inst->raw.clauses.reserve(db.clause_count());
    for (int32_t i = 0; i < db.clause_count(); ++i) {
      const nsat::LitSpan c = db.clause(i);
      inst->raw.clauses.emplace_back(c.begin(), c.end());
    }
    *out = inst;
    return NSAT_OK;
  });
}

nsat_status nsat_fuzz(uint64_t count, int32_t max_vars, uint64_t seed, int want_csv,
                      uint64_t* disagreements_out, char** report_out) {
  if (!report_out) return fail(NSAT_ERR_INVALID_ARG, "report_out is NULL");
  if (max_vars < 0 || max_vars > 20) {
    return fail(NSAT_ERR_LIMIT, "max_vars must lie in 0..20 for the oracle");
  }
  return guarded([&]() {
    const nsat::FuzzReport report = nsat::differential_fuzz(count, max_vars, seed);
    if (disagreements_out) *disagreements_out = report.instances - report.agreements;
    *report_out = copy_string(want_csv ? report.csv : report.to_text());
    return *report_out ? NSAT_OK : fail(NSAT_ERR_INTERNAL, "allocation failed");
  });
}

nsat_status nsat_bench(const int32_t* var_counts, const int32_t* clause_counts,
                       int32_t num_points, uint64_t seed, int want_csv,
                       char** report_out) {
  if (!var_counts || !clause_counts || !report_out || num_points <= 0) {
    return fail(NSAT_ERR_INVALID_ARG, "bad bench arguments");
  }
  return guarded([&]() {
    std::vector<std::pair<int32_t, int32_t>> sizes;
    sizes.reserve(num_points);
    for (int32_t i = 0; i < num_points; ++i) {
      sizes.emplace_back(var_counts[i], clause_counts[i]);
    }
    const nsat::BenchReport report = nsat::bench_linear(sizes, seed);
    *report_out = copy_string(want_csv ? report.to_csv() : report.to_text());
    return *report_out ? NSAT_OK : fail(NSAT_ERR_INTERNAL, "allocation failed");
  });
}

}  // extern "C"
