#ifndef DEPOLY_H
#define DEPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DepolyStatus {
  DEPOLY_STATUS_OK = 0,
  DEPOLY_STATUS_NULL_POINTER = 1,
  DEPOLY_STATUS_INVALID_ARGUMENT = 2,
  DEPOLY_STATUS_PARSE = 3,
  DEPOLY_STATUS_SIZE_LIMIT = 4,
  DEPOLY_STATUS_UNSUPPORTED = 5,
  DEPOLY_STATUS_PRECONDITION = 6,
  DEPOLY_STATUS_NOT_DOWNWARD_CLOSED = 7,
  DEPOLY_STATUS_BUFFER_TOO_SMALL = 8,
  DEPOLY_STATUS_OVERFLOW = 9,
  DEPOLY_STATUS_INTERNAL = 10,
  DEPOLY_STATUS_PANIC = 11,
} DepolyStatus;

/**
 * Polynomial kinds accepted by [`depoly_graph_polynomial`].
 */
typedef enum DepolyPolyKind {
  DEPOLY_POLY_KIND_DEPENDENCE = 0,
  DEPOLY_POLY_KIND_INDEPENDENCE = 1,
  DEPOLY_POLY_KIND_CLIQUE = 2,
  DEPOLY_POLY_KIND_ACYCLIC = 3,
} DepolyPolyKind;

typedef struct DepolyGraph DepolyGraph;

typedef struct DepolyPolynomial DepolyPolynomial;

typedef struct DepolySystem DepolySystem;

/**
 * Verdicts over a window `m`. `real_rooted` is 1, 0, or -1 for the zero
 * polynomial.
 */
typedef struct DepolySequenceReport {
  bool unimodal;
  bool log_concave;
  bool ordered_lc;
  bool ultra_lc;
  int32_t real_rooted;
} DepolySequenceReport;

/**
 * Hessian certificate summary. Signs are -1, 0 or 1.
 */
typedef struct DepolyHessian {
  size_t k;
  size_t r;
  uint64_t t[8];
  int32_t det_sign;
  int32_t ulc_gap_sign;
} DepolyHessian;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on this thread.
 */
const char *depoly_last_error(void);

const char *depoly_version(void);

/**
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum DepolyStatus depoly_graph_from_graph6(const char *text, struct DepolyGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries, 0-based).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum DepolyStatus depoly_graph_from_edges(size_t n,
                                          const uint32_t *edges,
                                          size_t edge_count,
                                          struct DepolyGraph **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed.
 */
size_t depoly_graph_order(const struct DepolyGraph *g);

/**
 * # Safety
 * `g` must come from this library and not have been freed.
 */
size_t depoly_graph_edge_count(const struct DepolyGraph *g);

/**
 * Writes the graph6 encoding into `buf`.
 *
 * # Safety
 * `g` must be a live handle; `buf` must hold `len` bytes.
 */
enum DepolyStatus depoly_graph_to_graph6(const struct DepolyGraph *g,
                                         char *buf,
                                         size_t len,
                                         size_t *needed);

/**
 * # Safety
 * `g` must come from this library; null is ignored.
 */
void depoly_graph_free(struct DepolyGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_graph_polynomial(const struct DepolyGraph *g,
                                          uint32_t kind,
                                          struct DepolyPolynomial **out);

/**
 * Builds a polynomial from `len` coefficients, constant term first.
 *
 * # Safety
 * `coeffs` must point to `len` readable values; `out` must be writable.
 */
enum DepolyStatus depoly_polynomial_from_i64(const int64_t *coeffs,
                                             size_t len,
                                             struct DepolyPolynomial **out);

/**
 * Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
 *
 * # Safety
 * `p` must be a live handle.
 */
size_t depoly_polynomial_len(const struct DepolyPolynomial *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_polynomial_coefficient_i64(const struct DepolyPolynomial *p,
                                                    size_t k,
                                                    int64_t *out);

/**
 * Decimal string of coefficient `k`, for values beyond 64 bits.
 *
 * # Safety
 * `p` must be a live handle; `buf` must hold `len` bytes.
 */
enum DepolyStatus depoly_polynomial_coefficient_string(const struct DepolyPolynomial *p,
                                                       size_t k,
                                                       char *buf,
                                                       size_t len,
                                                       size_t *needed);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_polynomial_is_real_rooted(const struct DepolyPolynomial *p, bool *out);

/**
 * Sequence verdicts with the coefficients padded to window `m`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_polynomial_report(const struct DepolyPolynomial *p,
                                           size_t m,
                                           struct DepolySequenceReport *out);

/**
 * # Safety
 * `p` must come from this library; null is ignored.
 */
void depoly_polynomial_free(struct DepolyPolynomial *p);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_hessian(const struct DepolyGraph *g, size_t k, struct DepolyHessian *out);

/**
 * Builds a system on `ground` elements from `len` member bitmasks.
 *
 * # Safety
 * `family` must point to `len` readable values; `out` must be writable.
 */
enum DepolyStatus depoly_system_from_family(size_t ground,
                                            const uint32_t *family,
                                            size_t len,
                                            struct DepolySystem **out);

/**
 * Parses `{"ground_size": n, "family": [...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DepolyStatus depoly_system_from_json(const char *json, struct DepolySystem **out);

/**
 * The ten-element system whose f-vector is not log-concave.
 *
 * # Safety
 * `out` must be writable.
 */
enum DepolyStatus depoly_system_counterexample(struct DepolySystem **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_system_rank(const struct DepolySystem *m, size_t *out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_system_min_l(const struct DepolySystem *m, size_t *out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_system_is_l_matroid(const struct DepolySystem *m, size_t l, bool *out);

/**
 * Copies the f-vector (ground size + 1 entries) into `buf`.
 *
 * # Safety
 * `m` must be a live handle; `buf` must hold `len` values.
 */
enum DepolyStatus depoly_system_f_vector(const struct DepolySystem *m,
                                         uint64_t *buf,
                                         size_t len,
                                         size_t *needed);

/**
 * Mason-type verdicts for the f-vector.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum DepolyStatus depoly_system_report(const struct DepolySystem *m,
                                       struct DepolySequenceReport *out);

/**
 * # Safety
 * `m` must come from this library; null is ignored.
 */
void depoly_system_free(struct DepolySystem *m);

/**
 * Runs a campaign over all labeled graphs on `n` vertices (or all systems on
 * ground `n` for the systems target) and returns the summary as JSON in
 * `*out_json`, to be released with [`depoly_string_free`]. `*consistent`
 * receives whether no violation was found. `workers` 0 means all cores.
 *
 * # Safety
 * `target` must be a NUL-terminated string; out pointers must be writable.
 */
enum DepolyStatus depoly_campaign_run(const char *target,
                                      size_t n,
                                      size_t workers,
                                      bool *consistent,
                                      char **out_json);

/**
 * # Safety
 * `s` must come from this library; null is ignored.
 */
void depoly_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEPOLY_H */
