#ifndef SYZLAB_H
#define SYZLAB_H

/* C interface to the syzlab core. All strings returned through `char**`
 * are heap-allocated and must be released with syz_string_free. Functions
 * return SYZ_OK on success; on failure the thread-local message from
 * syz_error_message() describes the problem. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SYZ_OK = 0,
  SYZ_ERR_USAGE = 2,    /* invalid parameters */
  SYZ_ERR_BUDGET = 3,   /* size or entry budget exceeded */
  SYZ_ERR_INTERNAL = 4  /* internal inconsistency or unexpected failure */
} syz_status;

typedef enum {
  SYZ_FORMAT_DIAGRAM = 0,
  SYZ_FORMAT_CSV = 1,
  SYZ_FORMAT_JSON = 2
} syz_format;

const char* syz_version(void);
const char* syz_error_message(void);
void syz_string_free(char* s);

/* Engine configuration. NULL everywhere means defaults: GF(32003),
 * budget 5e7, one worker. */
typedef struct syz_options syz_options;
syz_options* syz_options_new(void);
void syz_options_free(syz_options* o);
void syz_options_set_field(syz_options* o, uint32_t modulus); /* 0 = rationals */
void syz_options_set_budget(syz_options* o, int64_t budget);
void syz_options_set_jobs(syz_options* o, int jobs);

/* --- Koszul engine --- */

syz_status syz_kpq(const syz_options* o, int n, int b, int d, int p, int q,
                   int64_t* out);
syz_status syz_kpq_multi_prime(const syz_options* o, int n, int b, int d, int p,
                               int q, const uint32_t* primes, size_t n_primes,
                               char** json_out);
syz_status syz_betti_table(const syz_options* o, int n, int b, int d,
                           syz_format format, char** out);
syz_status syz_hilbert_check(const syz_options* o, int n, int b, int d,
                             int* pass, char** detail_out);
syz_status syz_reindex_check(const syz_options* o, int n, int b, int d, int p,
                             int q, int* pass);
/* Independent dense oracle; reduced = 0 computes over the untruncated ring. */
syz_status syz_brute_kpq(int n, int b, int d, int p, int q, int reduced,
                         int64_t* out);
/* dim of degree e in the truncated ring on n+1 variables with exponent cap
 * d-1. The cell grid of a full table is p in [0, dim at e = d], q in
 * [0, n+1]. */
syz_status syz_reduced_dim(int n, int d, int e, int64_t* out);
/* Renders a table assembled from externally computed cells.
 * cells_json: [{"p":int,"q":int,"value":int,"computed":bool}, ...];
 * cells absent or marked uncomputed show as "?" in the diagram. */
syz_status syz_table_render(int n, int b, int d, const char* field_tag,
                            const char* cells_json, syz_format format,
                            char** out);
/* Nonzero cells strictly outside the guaranteed support range, as a JSON
 * array; empty array means no candidate. Same cell encoding as above. */
syz_status syz_table_watch(int n, int b, int d, const char* cells_json,
                           char** json_out);

/* --- Certificates --- */

/* target = NULL selects the default target z_1^{d-1}..z_q^{d-1} z_0^{b+q};
 * otherwise a monomial in the `x0^a0*x1^a1` text form. */
syz_status syz_certificate_build(int n, int b, int d, int q, const char* target,
                                 int extra, char** json_out);
syz_status syz_certificate_verify(const char* certificate_json, int run_linalg,
                                  char** report_json_out);
syz_status syz_family_lower_bound(int n, int b, int d, int q, int p,
                                  const char* target, char** decimal_out);

/* --- Predictors --- */

syz_status syz_veronese_range(int n, int b, int d, int q, int64_t* lo,
                              int64_t* hi);
syz_status syz_cm_range(int64_t deg_x, int n, int c, int b, int d, int q,
                        int64_t r_d, int64_t* lo, int64_t* hi);
/* family: 0 curve (uses g), 1 veronese, 2 adjoint, 3 abelian (use n). */
syz_status syz_np_threshold(int family, int g, int n, int d, int k,
                            char** json_out);
syz_status syz_curve_kp1(int g, int d, int p, char** decimal_out);
syz_status syz_curve_gaussian(int g, int d, double a, double* out);
/* twist: 0 structure sheaf, 1 canonical. format: diagram or json. */
syz_status syz_curve_support(int g, int gon, int d, int twist,
                             syz_format format, char** out);
syz_status syz_curve_duality(int g, int b, int d, int p, int64_t* p_dual,
                             int64_t* b_dual);
syz_status syz_easy_support(int n, int64_t r_b, int64_t r_k_minus_b,
                            int64_t r_d, syz_format format, char** out);
syz_status syz_asymptotic_window(int n, int q, int64_t r_d, int d, double c1,
                                 double c2, int* nonempty, int64_t* lo,
                                 int64_t* hi);
syz_status syz_predict_veronese(int n, int b, int d, syz_format format,
                                char** out);
/* Computes the table, then lists engine cells outside the guaranteed
 * support range. An empty JSON array means no candidate. */
syz_status syz_counterexample_watch(const syz_options* o, int n, int b, int d,
                                    char** json_out);

/* --- Boij-Soderberg --- */

syz_status syz_bs_pure(int i, int r, char** json_out);
/* coefficients: comma-separated rationals "3/2,0,1,...", length r. */
syz_status syz_bs_synthesize(const char* coefficients, int r, char** csv_out);
/* table_csv: `p,q,value` lines as produced by syz_bs_synthesize. */
syz_status syz_bs_decompose(const char* table_csv, char** json_out);
/* dist: 0 uniform(0,1), 1 exponential(1), 2 beta(2,2). */
syz_status syz_bs_sample(int r, int n_samples, uint64_t seed, int dist,
                         const double* a_grid, size_t n_a, char** csv_out);

/* --- Acceptance suite --- */

/* Streams one line per criterion into *report_out; *all_pass is 1 only if
 * every criterion passed. */
syz_status syz_selftest(int include_slow, int jobs, int* all_pass,
                        char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* SYZLAB_H */
