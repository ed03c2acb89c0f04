/*
 * scsudoku - solution counting and permanent-based upper bounds for
 * isolated, partly filled, and spatially coupled Sudokus.
 *
 * C API over opaque handles. Every function that can fail returns an
 * scs_status; scs_last_error() carries a thread-local detail message for
 * the most recent failing call on the calling thread. Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with scs_string_free().
 */

#ifndef SCSUDOKU_H
#define SCSUDOKU_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SCS_API __declspec(dllexport)
#else
#define SCS_API __attribute__((visibility("default")))
#endif

typedef enum scs_status {
  SCS_OK = 0,
  SCS_ERROR_PARSE = 1,
  SCS_ERROR_INVALID_ARGUMENT = 2,
  SCS_ERROR_INCONSISTENT = 3,
  SCS_ERROR_TOO_LARGE = 4,
  SCS_ERROR_BUDGET_EXCEEDED = 5,
  SCS_ERROR_UNSUPPORTED = 6,
  SCS_ERROR_IO = 7,
  SCS_ERROR_INTERNAL = 8
} scs_status;

typedef struct scs_grid scs_grid;
typedef struct scs_layout scs_layout;
typedef struct scs_matrix scs_matrix;
typedef struct scs_bound scs_bound;
typedef struct scs_decomposition scs_decomposition;
typedef struct scs_composite scs_composite;
typedef struct scs_pf_counts scs_pf_counts;

SCS_API const char *scs_version(void);
SCS_API const char *scs_status_name(scs_status status);
SCS_API const char *scs_last_error(void);
SCS_API void scs_string_free(char *s);

/* ------------------------------------------------------------------ */
/* Grids.                                                              */
/*                                                                     */
/* Text format: line 1 "n <block order>", then n^2 rows of n^2 cell    */
/* tokens; "." marks an empty cell. For n <= 3 a row may also be n^2   */
/* unseparated characters; for larger n tokens are comma-separated.    */
/* ------------------------------------------------------------------ */

SCS_API scs_status scs_grid_parse(const char *text, scs_grid **out);
SCS_API scs_status scs_grid_read_file(const char *path, scs_grid **out);
SCS_API scs_status scs_grid_serialize(const scs_grid *g, char **out);
SCS_API int scs_grid_block_order(const scs_grid *g);
SCS_API scs_status scs_grid_is_consistent(const scs_grid *g, int *out);
SCS_API void scs_grid_free(scs_grid *g);

/* ------------------------------------------------------------------ */
/* Coupled layouts.                                                    */
/*                                                                     */
/* Text format: line 1 "n <block order>", then one line per component  */
/* "component <row_offset> <col_offset>" in block units. Catalog kinds */
/* are "shogun", "sumo", "stair:L", and "belt:L" (L >= 1 stages).      */
/* ------------------------------------------------------------------ */

SCS_API scs_status scs_layout_catalog(const char *kind, scs_layout **out);
SCS_API scs_status scs_layout_parse(const char *text, scs_layout **out);
SCS_API scs_status scs_layout_read_file(const char *path, scs_layout **out);
SCS_API scs_status scs_layout_serialize(const scs_layout *l, char **out);
SCS_API int scs_layout_block_order(const scs_layout *l);
SCS_API int scs_layout_component_count(const scs_layout *l);
SCS_API scs_status scs_layout_component(const scs_layout *l, int index, int *block_row,
                                        int *block_col);
SCS_API long long scs_layout_total_cells(const scs_layout *l);
SCS_API void scs_layout_free(scs_layout *l);

/* ------------------------------------------------------------------ */
/* (0,1)-matrices and permanents.                                      */
/*                                                                     */
/* Text format: line 1 "m <size>", then m rows of m space-separated    */
/* 0/1 tokens. Permanents are exact and returned as decimal strings.   */
/* ------------------------------------------------------------------ */

typedef enum scs_perm_method {
  SCS_PERM_NAIVE = 0, /* permutation expansion, size <= 9  */
  SCS_PERM_RYSER = 1  /* inclusion-exclusion, size <= 30   */
} scs_perm_method;

SCS_API scs_status scs_matrix_parse(const char *text, scs_matrix **out);
SCS_API scs_status scs_matrix_read_file(const char *path, scs_matrix **out);
SCS_API scs_status scs_matrix_serialize(const scs_matrix *m, char **out);
SCS_API int scs_matrix_size(const scs_matrix *m);
SCS_API scs_status scs_matrix_permanent(const scs_matrix *m, scs_perm_method method,
                                        char **out_decimal);
/* Bregman-Minc upper bound prod_i r_i!^(1/r_i) as a bound handle. */
SCS_API scs_status scs_matrix_bregman_minc(const scs_matrix *m, scs_bound **out);
/* Admissibility matrix of an empty row of g: entry (i,j) = 1 iff value
 * j+1 may go into cell i of row row_index given the filled cells. */
SCS_API scs_status scs_grid_admissibility(const scs_grid *g, int row_index, scs_matrix **out);
SCS_API void scs_matrix_free(scs_matrix *m);

/* ------------------------------------------------------------------ */
/* Closed-form bounds. A bound carries its natural log, an optional    */
/* exact integer value, and the factorial-power term decomposition.    */
/* ------------------------------------------------------------------ */

/* Upper bound for an (n;c1,c2) partly filled Sudoku; c1 = c2 = 0 gives
 * the plain n x n bound. */
SCS_API scs_status scs_bound_isolated(int n, int c1, int c2, scs_bound **out);
SCS_API double scs_bound_ln(const scs_bound *b);
SCS_API double scs_bound_log10(const scs_bound *b);
SCS_API int scs_bound_is_exact(const scs_bound *b);
SCS_API scs_status scs_bound_exact_decimal(const scs_bound *b, char **out);
/* Floor of the bound; confident is set to 0 when the value is too close
 * to an integer or beyond the reliable mantissa range. Fails with
 * SCS_ERROR_TOO_LARGE past 10^700 unless the bound is exact. */
SCS_API scs_status scs_bound_floor_decimal(const scs_bound *b, char **out, int *confident);
SCS_API int scs_bound_term_count(const scs_bound *b);
SCS_API scs_status scs_bound_term(const scs_bound *b, int index, long long *factorial_arg,
                                  long long *exp_num, long long *exp_den);
SCS_API void scs_bound_free(scs_bound *b);

/* Leading exponents alpha, beta of the bound for large n with
 * c1 = d1*n and c2 = d2*n: ln S_U ~ alpha n^4 ln n + beta n^4. */
SCS_API scs_status scs_asymptotic_exponents(double d1, double d2, double *alpha, double *beta);

/* ------------------------------------------------------------------ */
/* Decompositions of coupled layouts and composite bounds.             */
/* ------------------------------------------------------------------ */

/* Processes components in `order` (NULL = natural order 0..k-1); each
 * component's blocks shared with earlier ones must form a rectangle of
 * row/column bands. */
SCS_API scs_status scs_layout_decompose(const scs_layout *l, const int *order, int order_len,
                                        scs_decomposition **out);
/* Order minimizing the composite bound; exhaustive, up to 12 components. */
SCS_API scs_status scs_layout_best_decomposition(const scs_layout *l, int use_exact_free,
                                                 scs_decomposition **out);
/* Largest-overlap-first order for layouts too big for the exhaustive
 * search; not guaranteed optimal. */
SCS_API scs_status scs_layout_greedy_decomposition(const scs_layout *l, scs_decomposition **out);
SCS_API int scs_decomposition_size(const scs_decomposition *d);
SCS_API scs_status scs_decomposition_entry(const scs_decomposition *d, int pos, int *component,
                                           int *c1, int *c2);
/* Product of per-component bounds. With use_exact_free nonzero, components
 * with an empty rectangle use the stored exact count (n <= 3 only). */
SCS_API scs_status scs_decomposition_composite(const scs_decomposition *d, int use_exact_free,
                                               scs_composite **out);
SCS_API void scs_decomposition_free(scs_decomposition *d);

SCS_API double scs_composite_ln(const scs_composite *c);
SCS_API double scs_composite_log10(const scs_composite *c);
SCS_API double scs_composite_rate_upper(const scs_composite *c);
SCS_API long long scs_composite_cells(const scs_composite *c);
SCS_API int scs_composite_size(const scs_composite *c);
SCS_API scs_status scs_composite_component(const scs_composite *c, int pos, int *component,
                                           int *c1, int *c2, double *ln, int *used_exact_count);
SCS_API void scs_composite_free(scs_composite *c);

/* R = log_{n^2}(S) / C for a count or bound whose natural log is ln_value. */
SCS_API scs_status scs_coding_rate(double ln_value, int n, long long cells, double *out);
/* Large-stage limit of the coding-rate upper bound; kind is "stair" or "belt". */
SCS_API scs_status scs_rate_limit(const char *kind, double *out);

/* ------------------------------------------------------------------ */
/* Exact counting. node_budget = 0 means unlimited; when a budget is   */
/* exceeded the count aborts with SCS_ERROR_BUDGET_EXCEEDED instead of */
/* returning a wrong number. Counts are decimal strings.               */
/* ------------------------------------------------------------------ */

SCS_API scs_status scs_count_solutions(const scs_grid *g, unsigned long long node_budget,
                                       char **count_decimal, unsigned long long *nodes,
                                       double *seconds);
SCS_API scs_status scs_count_coupled(const scs_layout *l, unsigned long long node_budget,
                                     char **count_decimal, unsigned long long *nodes,
                                     double *seconds);
SCS_API scs_status scs_count_row_completions(const scs_grid *g, int row_index,
                                             char **count_decimal);

/* Solution counts of an (n;c1,c2) partly filled Sudoku over consistent
 * fillings of the rectangle: every pattern when sample = 0 (n = 2 only),
 * or `sample` random patterns drawn with the given seed. */
SCS_API scs_status scs_count_partly_filled(int n, int c1, int c2,
                                           unsigned long long node_budget,
                                           unsigned long long sample, unsigned long long seed,
                                           scs_pf_counts **out);
SCS_API unsigned long long scs_pf_counts_patterns(const scs_pf_counts *p);
SCS_API int scs_pf_counts_entry_count(const scs_pf_counts *p);
SCS_API scs_status scs_pf_counts_entry(const scs_pf_counts *p, int index, char **count_decimal,
                                       unsigned long long *patterns);
SCS_API scs_status scs_pf_counts_min(const scs_pf_counts *p, char **out);
SCS_API scs_status scs_pf_counts_max(const scs_pf_counts *p, char **out);
SCS_API void scs_pf_counts_free(scs_pf_counts *p);

#ifdef __cplusplus
}
#endif

#endif /* SCSUDOKU_H */
