#ifndef NICHOLS_DM_H
#define NICHOLS_DM_H

/* C interface to the nichols_dm engine. Every report is returned as a JSON document
 * (sorted keys, "schema": 1, exact scalars as strings) inside an opaque ndm_result.
 * On failure the context keeps a JSON error object, see ndm_context_last_error. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NDM_API __declspec(dllexport)
#else
#define NDM_API __attribute__((visibility("default")))
#endif

typedef struct ndm_context ndm_context;
typedef struct ndm_result ndm_result;
typedef struct ndm_lifting ndm_lifting;

typedef enum ndm_status {
  NDM_OK = 0,
  NDM_ERR_DOMAIN = 1,   /* rejected input: bad m, pair outside J, invalid datum, syntax */
  NDM_ERR_CHECK = 2,    /* a consistency check failed on valid input */
  NDM_ERR_INTERNAL = 3, /* unexpected exception */
  NDM_ERR_ARG = 4       /* null handle or pointer */
} ndm_status;

NDM_API const char* ndm_version(void);
NDM_API const char* ndm_status_name(ndm_status s);

NDM_API ndm_status ndm_context_create(ndm_context** out);
NDM_API void ndm_context_destroy(ndm_context* ctx);
/* threads <= 0 selects 1. */
NDM_API ndm_status ndm_context_set_threads(ndm_context* ctx, int threads);
/* JSON error object of the last failed call on this context, or "" after success. */
NDM_API const char* ndm_context_last_error(const ndm_context* ctx);

NDM_API const char* ndm_result_json(const ndm_result* r);
NDM_API void ndm_result_destroy(ndm_result* r);

/* Families, dimensions and the verdict for every irreducible module. */
NDM_API ndm_status ndm_classify_report(ndm_context* ctx, int m, int max_size, int set_only, ndm_result** out);
/* module: "I:(1,6)+(5,6)", "L:1+3", "K:(2,3)|3" or "irr:CLASS/REP[+CLASS/REP...]". */
NDM_API ndm_status ndm_nichols(ndm_context* ctx, int m, const char* module, ndm_result** out);
/* Type-D verdict for a conjugacy class label ("s", "sr", "r3", ...) of D_m, m >= 3. */
NDM_API ndm_status ndm_rack_report(ndm_context* ctx, int m, const char* class_label, ndm_result** out);
/* Irreducible representations, characters and the orthogonality check, m >= 3. */
NDM_API ndm_status ndm_reps_report(ndm_context* ctx, int m, ndm_result** out);
/* Orbits of the catalogue with |I| + |L| <= max_size over a parameter grid
 * ("0,1" when grid is null or empty). */
NDM_API ndm_status ndm_iso_report(ndm_context* ctx, int m, int max_size, const char* grid, int rescale,
                                  ndm_result** out);

/* family: 'a' single (i,k) with k != n, 'b' L only, 'c' A_I, 'd' B_{I,L}.
 * I like "(1,6)+(5,6)", L like "1+3"; either may be null when unused. */
NDM_API ndm_status ndm_lifting_create(ndm_context* ctx, int m, char family, const char* I, const char* L,
                                      ndm_lifting** out);
NDM_API void ndm_lifting_destroy(ndm_lifting* l);
/* kind "lambda" | "gamma" | "theta" | "mu": every free entry of that kind. */
NDM_API ndm_status ndm_lifting_set_all(ndm_lifting* l, const char* kind, const char* value);
/* slot like "lambda[0,1]"; overrides set_all. */
NDM_API ndm_status ndm_lifting_set(ndm_lifting* l, const char* slot, const char* value);
NDM_API ndm_status ndm_lifting_presentation(ndm_lifting* l, ndm_result** out);
/* Rewriting dimension, Hopf checks and identity-degree primitives. Returns NDM_ERR_CHECK with
 * a filled result when any check fails. */
NDM_API ndm_status ndm_lifting_verify(ndm_lifting* l, ndm_result** out);

#ifdef __cplusplus
}
#endif

#endif
