#ifndef TORIC_COHOMOLOGY_H
#define TORIC_COHOMOLOGY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ToricStatus {
  TORIC_STATUS_OK = 0,
  TORIC_STATUS_NULL_POINTER = 1,
  TORIC_STATUS_INVALID_FAN = 2,
  TORIC_STATUS_INVALID_POLYGON = 3,
  TORIC_STATUS_NOT_NORMALIZED = 4,
  TORIC_STATUS_INDEX_OUT_OF_RANGE = 5,
  TORIC_STATUS_OVERFLOW = 6,
  TORIC_STATUS_SINGULAR = 7,
  TORIC_STATUS_UNSUPPORTED = 8,
  TORIC_STATUS_BUFFER_TOO_SMALL = 9,
  TORIC_STATUS_PANIC = 10,
} ToricStatus;

/**
 * Opaque complete fan.
 */
typedef struct ToricFan ToricFan;

/**
 * Opaque matrix of exact rationals.
 */
typedef struct ToricMatrix ToricMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Validates `ray_count` rays given as interleaved `a0, b0, a1, b1, ...` in
 * counterclockwise order.
 *
 * # Safety
 * `coords` must point to `2 * ray_count` integers; `out` must be writable.
 */
enum ToricStatus toric_fan_new(const int64_t *coords, size_t ray_count, struct ToricFan **out);

/**
 * Normal fan of a convex lattice polygon with vertices in counterclockwise order.
 *
 * # Safety
 * `coords` must point to `2 * vertex_count` integers; `out` must be writable.
 */
enum ToricStatus toric_fan_from_polygon(const int64_t *coords,
                                        size_t vertex_count,
                                        struct ToricFan **out);

/**
 * # Safety
 * `fan` must come from this library and not be freed twice. Null is ignored.
 */
void toric_fan_free(struct ToricFan *fan);

/**
 * Number of rays, or 0 for a null handle.
 *
 * # Safety
 * `fan` must be null or a live handle.
 */
size_t toric_fan_ray_count(const struct ToricFan *fan);

/**
 * # Safety
 * `fan` must be a live handle; `a` and `b` must be writable.
 */
enum ToricStatus toric_fan_ray(const struct ToricFan *fan, size_t label, int64_t *a, int64_t *b);

/**
 * Normalizes with ray `pivot` moved to position n+1; `pivot` 0 selects the
 * fan's own ray n+1.
 *
 * # Safety
 * `fan` must be a live handle; `out` must be writable.
 */
enum ToricStatus toric_fan_normalize(const struct ToricFan *fan,
                                     size_t pivot,
                                     struct ToricFan **out);

/**
 * Intersection product matrix of a normalized fan.
 *
 * # Safety
 * `fan` must be a live handle; `out` must be writable.
 */
enum ToricStatus toric_intersection_matrix(const struct ToricFan *fan, struct ToricMatrix **out);

/**
 * Cellular cup product matrix of a normalized fan.
 *
 * # Safety
 * `fan` must be a live handle; `out` must be writable.
 */
enum ToricStatus toric_cup_matrix(const struct ToricFan *fan, struct ToricMatrix **out);

/**
 * Checks that the two matrices of a normalized fan are mutually inverse.
 * Either output pointer may be null.
 *
 * # Safety
 * `fan` must be a live handle; non-null outputs must be writable.
 */
enum ToricStatus toric_verify(const struct ToricFan *fan,
                              bool *identity_holds,
                              bool *oracle_agrees);

/**
 * # Safety
 * `m` must come from this library and not be freed twice. Null is ignored.
 */
void toric_matrix_free(struct ToricMatrix *m);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
size_t toric_matrix_rows(const struct ToricMatrix *m);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
size_t toric_matrix_cols(const struct ToricMatrix *m);

/**
 * Entry `(row, col)` (0-based) as a reduced fraction `num / den` with
 * `den > 0`. Returns `TORIC_STATUS_OVERFLOW` if either part exceeds 64 bits;
 * use [`toric_matrix_entry_string`] then.
 *
 * # Safety
 * `m` must be a live handle; `num` and `den` must be writable.
 */
enum ToricStatus toric_matrix_entry(const struct ToricMatrix *m,
                                    size_t row,
                                    size_t col,
                                    int64_t *num,
                                    int64_t *den);

/**
 * Writes entry `(row, col)` as a NUL-terminated `"p/q"` (or `"p"`) string.
 * `*needed` receives the buffer size required, including the terminator;
 * if `capacity` is smaller, nothing is written and `TORIC_STATUS_BUFFER_TOO_SMALL`
 * is returned. `buf` may be null when `capacity` is 0.
 *
 * # Safety
 * `m` must be a live handle; `buf` must have `capacity` writable bytes;
 * `needed` must be null or writable.
 */
enum ToricStatus toric_matrix_entry_string(const struct ToricMatrix *m,
                                           size_t row,
                                           size_t col,
                                           char *buf,
                                           size_t capacity,
                                           size_t *needed);

/**
 * Static description of a status code. Never null.
 */
const char *toric_status_message(enum ToricStatus status);

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next `toric_*` call on the same thread.
 */
const char *toric_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_COHOMOLOGY_H */
