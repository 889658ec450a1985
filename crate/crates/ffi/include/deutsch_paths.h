/* SPDX-License-Identifier: Apache-2.0 */

#ifndef DEUTSCH_PATHS_H
#define DEUTSCH_PATHS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Strip size meaning "no upper boundary".
 */
#define DEUTSCH_UNBOUNDED 0

typedef enum DeutschStatus {
  DEUTSCH_STATUS_OK = 0,
  DEUTSCH_STATUS_INVALID_ARGUMENT = 1,
  DEUTSCH_STATUS_NULL_POINTER = 2,
  DEUTSCH_STATUS_OUT_OF_RANGE = 3,
  DEUTSCH_STATUS_OVERFLOW = 4,
  DEUTSCH_STATUS_BUFFER_TOO_SMALL = 5,
  DEUTSCH_STATUS_VERIFICATION_FAILED = 6,
  DEUTSCH_STATUS_INTERNAL = 7,
  DEUTSCH_STATUS_PANIC = 8,
} DeutschStatus;

typedef enum DeutschMethod {
  /**
   * Dynamic programming.
   */
  DEUTSCH_METHOD_DP = 0,
  /**
   * Closed-form generating function.
   */
  DEUTSCH_METHOD_CLOSED = 1,
} DeutschMethod;

/**
 * Opaque list of exact integers.
 */
typedef struct DeutschSequence DeutschSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Number of `n`-step paths from `t` to `j`, as a one-element sequence.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum DeutschStatus deutsch_count_paths(size_t n,
                                       size_t t,
                                       size_t j,
                                       size_t m,
                                       enum DeutschMethod method,
                                       struct DeutschSequence **out);

/**
 * Coefficients `0..order` of the generating function from `t` to `j`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum DeutschStatus deutsch_series(size_t t,
                                  size_t j,
                                  size_t m,
                                  size_t order,
                                  enum DeutschMethod method,
                                  struct DeutschSequence **out);

/**
 * Count table for `0..=n_max` steps from `t`, flattened row by row. The
 * number of levels per row is written to `width`.
 *
 * # Safety
 * `out` and `width` must be null or valid for writes.
 */
enum DeutschStatus deutsch_table(size_t n_max,
                                 size_t t,
                                 size_t m,
                                 size_t *width,
                                 struct DeutschSequence **out);

/**
 * Coefficients (lowest degree first) of the strip determinant in `z`.
 * With `replace` set, column `j` is replaced by the unit vector `e_t`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum DeutschStatus deutsch_det(size_t m,
                               bool replace,
                               size_t t,
                               size_t j,
                               struct DeutschSequence **out);

/**
 * Runs every verification suite. Returns `VerificationFailed` when any
 * suite fails; `passed` receives the overall verdict.
 *
 * # Safety
 * `passed` must be null or valid for writes.
 */
enum DeutschStatus deutsch_verify(size_t m_max,
                                  size_t t_max,
                                  size_t n_max,
                                  size_t trunc,
                                  bool *passed);

/**
 * Number of values in the sequence; 0 for a null handle.
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
size_t deutsch_sequence_len(const struct DeutschSequence *seq);

/**
 * Reads value `index` as a signed 64-bit integer.
 *
 * # Safety
 * `seq` must be null or a live handle; `out` null or valid for writes.
 */
enum DeutschStatus deutsch_sequence_get_i64(const struct DeutschSequence *seq,
                                            size_t index,
                                            int64_t *out);

/**
 * Writes value `index` as a NUL-terminated decimal string into `buf`.
 * `needed` receives the buffer size required, terminator included, so a
 * call with `cap == 0` sizes the buffer.
 *
 * # Safety
 * `seq` must be null or a live handle; `buf` valid for `cap` bytes;
 * `needed` null or valid for writes.
 */
enum DeutschStatus deutsch_sequence_get_decimal(const struct DeutschSequence *seq,
                                                size_t index,
                                                char *buf,
                                                size_t cap,
                                                size_t *needed);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `seq` must be null or a handle not yet freed.
 */
void deutsch_sequence_free(struct DeutschSequence *seq);

/**
 * Static description of a status code.
 */
const char *deutsch_status_message(enum DeutschStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEUTSCH_PATHS_H */
