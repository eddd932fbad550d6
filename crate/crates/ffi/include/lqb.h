#ifndef LQB_H
#define LQB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LqbStatus {
  LQB_STATUS_OK = 0,
  LQB_STATUS_NULL_POINTER = 1,
  LQB_STATUS_UTF8 = 2,
  LQB_STATUS_PARSE = 3,
  LQB_STATUS_INVALID = 4,
  LQB_STATUS_DIMENSION_CAP = 5,
  LQB_STATUS_UNKNOWN_EXAMPLE = 6,
  LQB_STATUS_PANIC = 7,
} LqbStatus;

/**
 * Outcome of a verification run.
 */
typedef enum LqbVerdict {
  LQB_VERDICT_PASS = 0,
  LQB_VERDICT_FAIL = 1,
} LqbVerdict;

/**
 * Opaque handle to a parsed structure document.
 */
typedef struct LqbAlgebra LqbAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a JSON structure document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum LqbStatus lqb_algebra_from_json(const char *json, struct LqbAlgebra **out);

/**
 * Loads a catalog example by name.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a writable pointer.
 */
enum LqbStatus lqb_algebra_from_example(const char *name, struct LqbAlgebra **out);

/**
 * # Safety
 * `a` must be null or a handle from this library that has not been freed.
 */
void lqb_algebra_free(struct LqbAlgebra *a);

/**
 * Dimension of the underlying Lie algebra, 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t lqb_algebra_dim(const struct LqbAlgebra *a);

/**
 * Runs the axiom, relation and Laplacian checks.
 *
 * # Safety
 * `a` must be a live handle and `verdict_out` writable.
 */
enum LqbStatus lqb_check(const struct LqbAlgebra *a, enum LqbVerdict *verdict_out);

/**
 * Like [`lqb_check`], also returning the JSON report.
 *
 * # Safety
 * `a` must be a live handle; `verdict_out` and `json_out` writable.
 */
enum LqbStatus lqb_check_report_json(const struct LqbAlgebra *a,
                                     enum LqbVerdict *verdict_out,
                                     char **json_out);

/**
 * Builds the double and writes its structure document to `json_out`.
 * Returns `LQB_STATUS_INVALID` when the input does not validate.
 *
 * # Safety
 * `a` must be a live handle and `json_out` writable.
 */
enum LqbStatus lqb_double_json(const struct LqbAlgebra *a, char **json_out);

/**
 * Verifies the representation and the map `Q`; `rank_out` receives the
 * rank of `Q`. A `max_dim` of 0 selects the default cap.
 *
 * # Safety
 * `a` must be a live handle; `verdict_out` and `rank_out` writable.
 */
enum LqbStatus lqb_rep_verify(const struct LqbAlgebra *a,
                              size_t max_dim,
                              enum LqbVerdict *verdict_out,
                              size_t *rank_out);

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *lqb_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void lqb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LQB_H */
