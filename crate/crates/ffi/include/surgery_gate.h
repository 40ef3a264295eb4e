#ifndef SURGERY_GATE_H
#define SURGERY_GATE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SgStatus {
  SG_STATUS_OK = 0,
  SG_STATUS_NULL_POINTER = 1,
  SG_STATUS_INVALID_ARGUMENT = 2,
  SG_STATUS_PARSE = 3,
  SG_STATUS_VALIDATION = 4,
  SG_STATUS_NOT_FOUND = 5,
  /**
   * The inputs do not determine the value (e.g. a missing mirror profile).
   */
  SG_STATUS_INDETERMINATE = 6,
  /**
   * The value does not fit the `int64_t` fields of [`SgRational`].
   */
  SG_STATUS_OVERFLOW = 7,
  SG_STATUS_NEAR_SINGULAR = 8,
  SG_STATUS_IO = 9,
  SG_STATUS_PANIC = 10,
} SgStatus;

typedef enum SgVerdict {
  SG_VERDICT_OBSTRUCTED = 0,
  SG_VERDICT_NOT_OBSTRUCTED = 1,
  SG_VERDICT_INDETERMINATE = 2,
} SgVerdict;

/**
 * Parsed, validated knot table.
 */
typedef struct SgKnotTable SgKnotTable;

/**
 * `num / den` in lowest terms, `den > 0`.
 */
typedef struct SgRational {
  int64_t num;
  int64_t den;
} SgRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty after success.
 * Valid until the next call into this library on the same thread.
 */
const char *sg_last_error(void);

/**
 * Parses a JSON knot table from a NUL-terminated string.
 *
 * # Safety
 * `json` must be a valid C string and `out` valid for writes.
 */
enum SgStatus sg_knot_table_parse(const char *json, struct SgKnotTable **out);

/**
 * Reads and parses a JSON knot table from a file.
 *
 * # Safety
 * `path` must be a valid C string and `out` valid for writes.
 */
enum SgStatus sg_knot_table_load(const char *path, struct SgKnotTable **out);

/**
 * # Safety
 * `table` must come from this library and not be used afterwards. NULL is
 * ignored.
 */
void sg_knot_table_free(struct SgKnotTable *table);

/**
 * Number of knots in the table, 0 for NULL.
 *
 * # Safety
 * `table` must be NULL or a live handle.
 */
size_t sg_knot_table_len(const struct SgKnotTable *table);

/**
 * `s(q, p)` for coprime `q` and `p >= 1`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SgStatus sg_dedekind_sum(int64_t q, int64_t p, struct SgRational *out);

/**
 * `d(L(p,q), i)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SgStatus sg_lens_d(int64_t p, int64_t q, int64_t i, struct SgRational *out);

/**
 * Casson–Walker invariant of `L(p,q)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SgStatus sg_lens_lambda(int64_t p, int64_t q, struct SgRational *out);

/**
 * `d(S³_{p/q}(K), i)`; `SG_STATUS_INDETERMINATE` for a negative slope
 * without a mirror profile.
 *
 * # Safety
 * `table` must be a live handle, `name` a valid C string, `out` valid for
 * writes.
 */
enum SgStatus sg_surgery_d(const struct SgKnotTable *table,
                           const char *name,
                           int64_t p,
                           int64_t q,
                           int64_t i,
                           struct SgRational *out);

/**
 * `λ(S³_{p/q}(K))`.
 *
 * # Safety
 * As for [`sg_surgery_d`].
 */
enum SgStatus sg_casson_walker(const struct SgKnotTable *table,
                               const char *name,
                               int64_t p,
                               int64_t q,
                               struct SgRational *out);

/**
 * Total Casson–Gordon invariant of `S³_{p/q}(K)`, `p >= 1`.
 *
 * # Safety
 * As for [`sg_surgery_d`].
 */
enum SgStatus sg_casson_gordon(const struct SgKnotTable *table,
                               const char *name,
                               int64_t p,
                               int64_t q,
                               struct SgRational *out);

/**
 * Verdict of the cosmetic-surgery gate for one knot.
 *
 * # Safety
 * As for [`sg_surgery_d`].
 */
enum SgStatus sg_cosmetic_check(const struct SgKnotTable *table,
                                const char *name,
                                int64_t p_max,
                                int64_t q_max,
                                enum SgVerdict *out);

/**
 * Runs a CLI invocation (`argv` without the program name). The report is
 * written to `*out_json` (free with [`sg_string_free`]); `*out_code` gets
 * the exit status. On a nonzero exit `*out_json` holds the error text.
 *
 * # Safety
 * `argv` must point to `argc` valid C strings; out pointers valid for
 * writes.
 */
enum SgStatus sg_run_command(int argc, const char *const *argv, char **out_json, int *out_code);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. NULL is
 * ignored.
 */
void sg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SURGERY_GATE_H */
