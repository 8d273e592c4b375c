/* C API for the Houghton group toolkit.
 *
 * All functions return houghton_status; HOUGHTON_OK is 0. On failure,
 * houghton_last_error() describes the problem (thread-local). Out-params are
 * written only on success. Strings returned through char** are owned by the
 * caller and must be released with houghton_string_free; elements through
 * houghton_elem** with houghton_elem_free.
 */
#ifndef HOUGHTON_H
#define HOUGHTON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct houghton_elem houghton_elem; /* opaque */

typedef enum {
  HOUGHTON_OK = 0,
  HOUGHTON_ERR_VIOLATION = 1, /* counterexample / pre- or postcondition failure */
  HOUGHTON_ERR_USAGE = 2,     /* bad arguments, parse errors */
  HOUGHTON_ERR_BUDGET = 3,    /* search or enumeration budget exhausted */
  HOUGHTON_ERR_INTERNAL = 4
} houghton_status;

const char* houghton_schema(void); /* "houghton/1" */
const char* houghton_last_error(void);
void houghton_string_free(char* s);

/* ---- elements ---- */
houghton_status houghton_elem_parse(const char* dsl, int arity, houghton_elem** out);
houghton_status houghton_elem_from_json(const char* json, houghton_elem** out);
void houghton_elem_free(houghton_elem* e);
houghton_status houghton_elem_format(const houghton_elem* e, char** out);
houghton_status houghton_elem_to_json(const houghton_elem* e, char** out);
int houghton_elem_arity(const houghton_elem* e);
int houghton_elem_equal(const houghton_elem* a, const houghton_elem* b);
houghton_status houghton_elem_compose(const houghton_elem* a, const houghton_elem* b,
                                      houghton_elem** out);
houghton_status houghton_elem_inverse(const houghton_elem* a, houghton_elem** out);
houghton_status houghton_elem_apply(const houghton_elem* e, int ray, int64_t coord,
                                    int* ray_out, int64_t* coord_out);
/* lambda_out must hold houghton_elem_arity(e) entries */
houghton_status houghton_elem_lambda(const houghton_elem* e, int64_t* lambda_out);
/* tag: "syminf" | "fix:i" | "ker:i" | "partial:i,j,..." | "sym2:i,j" */
houghton_status houghton_elem_member(const houghton_elem* e, const char* tag, int* out);
houghton_status houghton_elem_conj_t(const houghton_elem* e, int64_t s, houghton_elem** out);

/* ---- word norms ---- */
houghton_status houghton_norm_formula(const houghton_elem* e, int64_t* out);
/* window < 0 selects the self-validating widening oracle; max_len < 0 uses
 * the formula bound. JSON result: {"schema","length","witness"} with
 * "length" an integer or "exceeds". */
houghton_status houghton_norm_bfs(const houghton_elem* e, int64_t window, int64_t max_len,
                                  int want_witness, char** json_out);

/* ---- confining checks ---- */
/* ambient: "syminf" | "hn" | "ker:i" | "partial:...". subset: tag as above.
 * Returns the report as JSON; *verdict is 1 when every sampled axiom passed. */
houghton_status houghton_confine_check(int arity, const char* ambient, const char* subset,
                                       const char* auto_dsl, int samples, uint64_t seed,
                                       int n0_max, int64_t esc_max, int* verdict,
                                       char** json_out);

/* ---- witness combinators ---- */
/* kind: "pi" | "omega" | "munu" | "swap" | "fixing" | "decompose" |
 *       "retract" | "fixfactor"; args and result are JSON documents, see the
 * CLI for the field names. A violation report is returned as JSON with
 * status HOUGHTON_ERR_VIOLATION. */
houghton_status houghton_witness_run(const char* kind, const char* json_args, char** json_out);

/* ---- hyperbolic-structure posets ---- */
/* perms: disjoint-cycle generators separated by ';' (empty for trivial G);
 * format: "dot" | "json". */
houghton_status houghton_poset_emit(int n, const char* perms, int lineal_sample, uint64_t seed,
                                    const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HOUGHTON_H */
