/* C interface to the hyperoctahedral representation toolkit.
 *
 * Every operation fills in a hyp_result handle.  On success the handle's
 * text() is the rendered report; on failure text() is empty and message()
 * says what went wrong.  The handle must be freed with hyp_result_free
 * in either case.  NULL out-pointers are rejected.
 */
#ifndef HYPEROCT_H
#define HYPEROCT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hyp_status {
  HYP_OK = 0,
  HYP_ERROR_INVALID_INPUT = 1,
  HYP_ERROR_HYPOTHESIS = 2,
  HYP_ERROR_LIMIT = 3,
  HYP_ERROR_INTERNAL = 4
} hyp_status;

typedef enum hyp_format {
  HYP_FORMAT_TEXT = 0,
  HYP_FORMAT_JSON = 1,
  HYP_FORMAT_CSV = 2
} hyp_format;

typedef struct hyp_result hyp_result;

const char* hyp_version(void);

void hyp_result_free(hyp_result* res);
hyp_status hyp_result_status(const hyp_result* res);
/* Rendered report; empty string on error.  Owned by the handle. */
const char* hyp_result_text(const hyp_result* res);
/* Error description; empty string on success.  Owned by the handle. */
const char* hyp_result_message(const hyp_result* res);

/* Conjugacy classes of the signed permutation group on n symbols. */
hyp_status hyp_classes(int n, hyp_format format, hyp_result** out);

/* Cycle type, centralizer order and class size of one element, given in
 * cycle notation, e.g. "(1 2)(1- 2-)(3 3-)". */
hyp_status hyp_centralizer(const char* perm_cycles, int n, hyp_format format, hyp_result** out);

/* Dimension of the model module M_(a,b,c). */
hyp_status hyp_model_dim(int a, int b, int c, hyp_format format, hyp_result** out);

/* Bipartition labels of the ordinary constituents of M_(a,b,c). */
hyp_status hyp_model_constituents(int a, int b, int c, hyp_format format, hyp_result** out);

/* Dimension of the irreducible labelled by "lambda|mu", e.g. "2,1|1". */
hyp_status hyp_specht_dim(const char* pair, hyp_format format, hyp_result** out);

/* The diagram basis of M_(a,b,c).  limit < 0 disables the size guard. */
hyp_status hyp_basis(int a, int b, int c, long long limit, hyp_format format, hyp_result** out);

/* Dimension of the fixed-point space of M_(a,b,c) under a p-subgroup.
 * subgroup accepts "R_<r>", "N_<r>", "K_<r>", "R_omega:<pairs>/<rest>"
 * (e.g. "R_omega:1+2/3"), "Q:<l1>,<l2>,<t>,<u>", or "gens:<cycles>;...".
 * jobs > 1 splits the basis scan across threads. */
hyp_status hyp_brauer_dim(int a, int b, int c, int p, const char* subgroup, long long limit,
                          int jobs, hyp_format format, hyp_result** out);

/* Per-summand fixed-point dimensions of M_(a,b,c) under the rank-r cyclic
 * subgroup, with the cross-check total. */
hyp_status hyp_summand_table(int a, int b, int c, int p, int r, long long limit, int jobs,
                             hyp_format format, hyp_result** out);

/* Pair/rest partitions of {1..2s+k} into s pairs and k singletons. */
hyp_status hyp_omega(int s, int k, long long limit, hyp_format format, hyp_result** out);

/* Candidate vertex subgroups for the summands of M_(a,b,c) at the prime p. */
hyp_status hyp_vertices(int a, int b, int c, int p, hyp_format format, hyp_result** out);

/* Minimal weight w and the partition set E_b(gamma); gamma is a p-core
 * given as "3,1" ("" for the empty partition). */
hyp_status hyp_e_set(const char* gamma, int p, int b, int w_cap, hyp_format format,
                     hyp_result** out);

/* Whether the minimal-weight hypothesis holds for (gamma, b). */
hyp_status hyp_hypothesis(const char* gamma, int p, int b, int w_cap, hyp_format format,
                          hyp_result** out);

/* Column patterns of the decomposition matrix of one block.  Fails with
 * HYP_ERROR_HYPOTHESIS when the minimal-weight hypothesis is violated. */
hyp_status hyp_decomp_cols(const char* gamma, const char* delta, int b, int c, int p, int w_cap,
                           hyp_format format, hyp_result** out);

/* Block label (core and weight of each factor) of a bipartition. */
hyp_status hyp_block_label(const char* pair, int p, hyp_format format, hyp_result** out);

/* Bipartition labels of the p-modular simples for the group on n symbols. */
hyp_status hyp_simple_labels(int n, int p, hyp_format format, hyp_result** out);

/* Order of the subgroup generated by ';'-separated cycle-notation
 * generators; stops with HYP_ERROR_LIMIT past cap elements. */
hyp_status hyp_closure_order(const char* gens, int n, long long cap, hyp_format format,
                             hyp_result** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYPEROCT_H */
