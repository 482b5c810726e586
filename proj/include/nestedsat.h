/* nestedsat -- linear-time satisfiability for nested CNF instances.
 *
 * C interface to the solver library. Instances are opaque handles holding
 * clauses exactly as supplied (duplicates, units and tautologies included);
 * solving normalizes internally. All functions returning nsat_status leave a
 * human-readable message in nsat_last_error() on failure.
 *
 * Thread safety: distinct instances may be used from distinct threads;
 * nsat_last_error() is thread-local.
 */
#ifndef NESTEDSAT_H
#define NESTEDSAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nsat_instance nsat_instance;

typedef enum nsat_status {
  NSAT_OK = 0,
  NSAT_ERR_INVALID_ARG = 1,
  NSAT_ERR_PARSE = 2,
  NSAT_ERR_NOT_NESTED = 3,
  NSAT_ERR_NOT_ORDERED = 4,
  NSAT_ERR_LIMIT = 5,
  NSAT_ERR_INTERNAL = 6
} nsat_status;

/* Verdicts follow the usual SAT-solver exit-code convention. */
#define NSAT_SATISFIABLE 10
#define NSAT_UNSATISFIABLE 20

/* Flags for the solve entry points. */
#define NSAT_SOLVE_NO_SORT 1u /* require straddle-respecting input order */

const char* nsat_version(void);

/* Message for the most recent failure on the calling thread. Never NULL. */
const char* nsat_last_error(void);

/* -------- instance lifecycle -------- */

nsat_status nsat_instance_new(int32_t var_count, nsat_instance** out);

/* Parses DIMACS CNF text ('c' comments, "p cnf <n> <m>" header, zero
 * terminated clauses). The header clause count is advisory; mismatches are
 * reported via nsat_instance_warnings(). */
nsat_status nsat_instance_parse_dimacs(const char* text, nsat_instance** out);

void nsat_instance_free(nsat_instance* inst);

/* Appends a clause of `len` nonzero literals with |lit| <= var_count.
 * len may be 0 (the empty clause, which is unsatisfiable). */
nsat_status nsat_instance_add_clause(nsat_instance* inst, const int32_t* lits,
                                     int32_t len);

int32_t nsat_instance_var_count(const nsat_instance* inst);
int32_t nsat_instance_clause_count(const nsat_instance* inst);

/* Newline-separated parser warnings; empty string when none. Owned by the
 * instance. */
const char* nsat_instance_warnings(const nsat_instance* inst);

/* Canonical DIMACS text for the instance. Free with nsat_string_free. */
nsat_status nsat_instance_emit_dimacs(const nsat_instance* inst, char** text_out);

void nsat_string_free(char* text);

/* -------- structure diagnostics -------- */

/* Reports whether the clause set is nested (no two clauses straddle each
 * other) and whether the given clause order is straddle-respecting. When not
 * nested, overlap_pair_out receives 1-based clause numbers of an overlapping
 * pair and overlap_vars_out one straddling variable per direction. Any out
 * pointer may be NULL. */
nsat_status nsat_instance_check(const nsat_instance* inst, int* nested_out,
                                int* ordered_out, int32_t overlap_pair_out[2],
                                int32_t overlap_vars_out[2]);

/* Produces a new instance with the clauses in straddle-respecting order
 * (deterministic). Fails with NSAT_ERR_NOT_NESTED when no such order exists. */
nsat_status nsat_instance_sort(const nsat_instance* inst, nsat_instance** sorted_out);

/* -------- solving -------- */

typedef struct nsat_solve_stats {
  uint64_t visited_x;   /* partition points visited by the scan */
  uint64_t visit_bound; /* 2(m+1)+n, never exceeded */
} nsat_solve_stats;

/* Decides satisfiability. verdict_out receives NSAT_SATISFIABLE or
 * NSAT_UNSATISFIABLE. stats_out may be NULL; it reports zeros when the
 * instance was decided during normalization alone. */
nsat_status nsat_instance_solve(const nsat_instance* inst, uint32_t flags,
                                int* verdict_out, nsat_solve_stats* stats_out);

/* Like nsat_instance_solve; on SAT additionally fills values_out[v-1] with
 * 0/1 for every variable v. values_out must hold var_count entries. The
 * assignment is validated against the original clauses before returning. */
nsat_status nsat_instance_solve_witness(const nsat_instance* inst, uint32_t flags,
                                        int* verdict_out, uint8_t* values_out);

/* -------- instance supply and evidence -------- */

/* Random nested instance, deterministic in seed. The produced clause count
 * can fall short of `clauses` when vars < 2; inspect the instance. */
nsat_status nsat_generate(int32_t vars, int32_t clauses, int32_t max_width,
                          double interior_prob, double negate_prob, uint64_t seed,
                          nsat_instance** out);

/* Differential fuzzing of the solver against a brute-force oracle on `count`
 * generated instances with at most max_vars variables. Disagreement is data,
 * not an error: *disagreements_out reports it and the report (text, or CSV
 * when want_csv) carries a minimized counterexample. */
nsat_status nsat_fuzz(uint64_t count, int32_t max_vars, uint64_t seed, int want_csv,
                      uint64_t* disagreements_out, char** report_out);

/* Times solve() on generated instances of the given sizes and reports
 * wall times, visited-x counts and growth ratios. */
nsat_status nsat_bench(const int32_t* var_counts, const int32_t* clause_counts,
                       int32_t num_points, uint64_t seed, int want_csv,
                       char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* NESTEDSAT_H */
