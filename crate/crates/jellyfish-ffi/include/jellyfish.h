#ifndef JELLYFISH_H
#define JELLYFISH_H

#pragma once

/* Generated by cbindgen from crates/jellyfish-ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum JfStatus {
  JF_STATUS_OK = 0,
  JF_STATUS_NULL_POINTER = 1,
  JF_STATUS_INVALID_UTF8 = 2,
  JF_STATUS_INVALID_PARAMETERS = 3,
  JF_STATUS_INVALID_SHAPE = 4,
  JF_STATUS_INVALID_ENDPOINTS = 5,
  JF_STATUS_PARSE = 6,
  JF_STATUS_NOT_STANDARD = 7,
  JF_STATUS_UNSUPPORTED = 8,
  JF_STATUS_ORACLE_MISMATCH = 9,
  JF_STATUS_PANIC = 10,
} JfStatus;

/**
 * The classical group of a dual pair.
 */
typedef enum JfGroup {
  JF_GROUP_GL = 0,
  JF_GROUP_SP = 1,
  JF_GROUP_O = 2,
} JfGroup;

/**
 * Opaque dual pair.
 */
typedef struct JfCase JfCase;

/**
 * Opaque rational series in t.
 */
typedef struct JfSeries JfSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the next call.
 */
const char *jf_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library and not yet freed.
 */
void jf_string_free(char *s);

/**
 * Creates a dual pair. `p`, `q` are read for GL and `n` for Sp and O; `k` must not exceed the rank.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum JfStatus jf_case_new(enum JfGroup group,
                          uint32_t k,
                          uint32_t p,
                          uint32_t q,
                          uint32_t n,
                          struct JfCase **out);

/**
 * Releases a case handle.
 *
 * # Safety
 * `case` must be null or a handle from `jf_case_new` not yet freed.
 */
void jf_case_free(struct JfCase *case_);

/**
 * Display name of the case, e.g. `GL(3,3,4)`.
 *
 * # Safety
 * `case` and `out` must be valid pointers.
 */
enum JfStatus jf_case_name(const struct JfCase *case_, char **out);

/**
 * Reduced Hilbert series of the covariants of shape `tau` (e.g. `"2,1"`, `"1,-1"`, `"0"`).
 *
 * # Safety
 * `case`, `tau` and `out` must be valid pointers; `tau` is NUL-terminated.
 */
enum JfStatus jf_covariant_series(const struct JfCase *case_,
                                  const char *tau,
                                  struct JfSeries **out);

/**
 * Hilbert series of the SL(k) invariants of p vectors and q covectors.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum JfStatus jf_sl_invariant_series(uint32_t k, uint32_t p, uint32_t q, struct JfSeries **out);

/**
 * Hilbert series of the Wallach representation of level `k` for `name` in `"E6"`, `"E7"`, `"D5"`, ...
 *
 * # Safety
 * `name` and `out` must be valid pointers; `name` is NUL-terminated.
 */
enum JfStatus jf_wallach_series(const char *name,
                                uint32_t k,
                                struct JfSeries **out);

/**
 * Releases a series handle.
 *
 * # Safety
 * `series` must be null or a handle from this library not yet freed.
 */
void jf_series_free(struct JfSeries *series);

/**
 * LaTeX rendering of the series.
 *
 * # Safety
 * `series` and `out` must be valid pointers.
 */
enum JfStatus jf_series_latex(const struct JfSeries *series, char **out);

/**
 * JSON rendering of the series (numerator coefficients and denominator factors).
 *
 * # Safety
 * `series` and `out` must be valid pointers.
 */
enum JfStatus jf_series_json(const struct JfSeries *series, char **out);

/**
 * Writes the first `len` power series coefficients into `coeffs`.
 * Fails with `JF_STATUS_UNSUPPORTED` if a coefficient does not fit in 64 bits.
 *
 * # Safety
 * `series` must be valid and `coeffs` must point to `len` writable values.
 */
enum JfStatus jf_series_coefficients(const struct JfSeries *series, int64_t *coeffs, size_t len);

/**
 * Bernstein degree of the covariants of shape `tau`, as a decimal string.
 *
 * # Safety
 * `case`, `tau` and `out` must be valid pointers; `tau` is NUL-terminated.
 */
enum JfStatus jf_bernstein_degree(const struct JfCase *case_, const char *tau, char **out);

/**
 * Compares the series against split-monomial counting up to `max_degree` and checks
 * unique location of standard supports up to `locate_degree`.
 * Returns `JF_STATUS_ORACLE_MISMATCH` on disagreement; `report` (may be null) receives the JSON report either way.
 *
 * # Safety
 * `case` and `tau` must be valid pointers; `report` may be null.
 */
enum JfStatus jf_oracle_check(const struct JfCase *case_,
                              const char *tau,
                              uint32_t max_degree,
                              uint32_t locate_degree,
                              char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JELLYFISH_H */
