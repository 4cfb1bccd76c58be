#ifndef EHRHART_H
#define EHRHART_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum EhrStatus {
  EHR_STATUS_OK = 0,
  EHR_STATUS_NULL_POINTER = 1,
  EHR_STATUS_INVALID_UTF8 = 2,
  EHR_STATUS_PARSE = 3,
  EHR_STATUS_DEGENERATE = 4,
  /**
   * A mathematical precondition failed (origin not interior, not Fano, ...).
   */
  EHR_STATUS_DOMAIN = 5,
  EHR_STATUS_UNKNOWN_CHECK = 6,
  EHR_STATUS_INTERNAL = 7,
} EhrStatus;

/**
 * Opaque polytope handle.
 */
typedef struct EhrPolytope EhrPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the first block of `text` (`dim nverts` header, then one vertex per
 * row) into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum EhrStatus ehr_polytope_from_text(const char *text, struct EhrPolytope **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void ehr_polytope_free(struct EhrPolytope *p);

/**
 * Ambient dimension, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t ehr_polytope_dim(const struct EhrPolytope *p);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t ehr_polytope_num_vertices(const struct EhrPolytope *p);

/**
 * Exact volume as `"p/q"` (or an integer).
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum EhrStatus ehr_polytope_volume(const struct EhrPolytope *p, char **out);

/**
 * Exact barycenter as `"(a, b, ...)"`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum EhrStatus ehr_polytope_barycenter(const struct EhrPolytope *p, char **out);

/**
 * Polar dual as a new handle; requires the origin in the interior.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum EhrStatus ehr_polytope_dual(const struct EhrPolytope *p, struct EhrPolytope **out);

/**
 * Vertex list in the text block format.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum EhrStatus ehr_polytope_to_text(const struct EhrPolytope *p, char **out);

/**
 * Runs the named check (`ehrhart`, `milman-pajor`, `minkowski`, `grunbaum`,
 * `root-symmetry`, `toric`) and writes its JSON report.
 *
 * # Safety
 * `p` must be a live handle, `check` a nul-terminated string and `out` a
 * valid pointer.
 */
enum EhrStatus ehr_polytope_check(const struct EhrPolytope *p, const char *check, char **out);

/**
 * JSON toric Fano report for a Fano polytope.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum EhrStatus ehr_polytope_toric_report(const struct EhrPolytope *p, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ehr_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * failing call on the same thread; do not free.
 */
const char *ehr_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EHRHART_H */
