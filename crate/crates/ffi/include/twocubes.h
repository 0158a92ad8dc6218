#ifndef TWOCUBES_H
#define TWOCUBES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define TWOCUBES_FORMAT_CSV 0

#define TWOCUBES_FORMAT_JSON 1

#define TWOCUBES_FORMAT_MARKDOWN 2

#define TWOCUBES_FORMAT_BFILE 3

#define TWOCUBES_FAMILY_BOTH 0

#define TWOCUBES_FAMILY_ONE 1

#define TWOCUBES_FAMILY_TWO 2

#define TWOCUBES_METHOD_PARAMETRIC 0

#define TWOCUBES_METHOD_RECURRENCE 1

/**
 * Result code of every call. Values match the command-line exit statuses where they overlap.
 */
typedef enum TwocubesStatus {
  TWOCUBES_STATUS_OK = 0,
  /**
   * A record or row failed verification.
   */
  TWOCUBES_STATUS_VERIFY_FAILED = 1,
  TWOCUBES_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The oracle's trial-division budget ran out.
   */
  TWOCUBES_STATUS_BUDGET_EXCEEDED = 3,
  TWOCUBES_STATUS_NULL_POINTER = 4,
  /**
   * Internal panic caught at the boundary.
   */
  TWOCUBES_STATUS_PANIC = 5,
} TwocubesStatus;

/**
 * Opaque table of named columns.
 */
typedef struct TwocubesTable TwocubesTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the next failing call.
 */
const char *twocubes_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *twocubes_version(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void twocubes_string_free(char *s);

/**
 * # Safety
 * `table` must come from this library and not have been freed already.
 */
void twocubes_table_free(struct TwocubesTable *table);

/**
 * # Safety
 * `table` must be a live table or NULL.
 */
size_t twocubes_table_rows(const struct TwocubesTable *table);

/**
 * # Safety
 * `table` must be a live table or NULL.
 */
size_t twocubes_table_columns(const struct TwocubesTable *table);

/**
 * Name of column `col`, newly allocated, or NULL when out of range.
 *
 * # Safety
 * `table` must be a live table or NULL.
 */
char *twocubes_table_column_name(const struct TwocubesTable *table, size_t col);

/**
 * Cell text, newly allocated: a decimal integer, a root tag, or "" for an empty cell.
 * NULL when out of range.
 *
 * # Safety
 * `table` must be a live table or NULL.
 */
char *twocubes_table_cell(const struct TwocubesTable *table, size_t row, size_t col);

/**
 * Encodes the table as CSV, JSON, Markdown or b-file (`column` picks the
 * b-file column and may be NULL for other formats).
 *
 * # Safety
 * `table` must be a live table, `column` NULL or a valid C string, `out` writable.
 */
enum TwocubesStatus twocubes_table_encode(const struct TwocubesTable *table,
                                          uint32_t format,
                                          const char *column,
                                          char **out);

/**
 * Solutions with `0 < n < n_max`, columns `n,a,b,root,N,x,y`. `jobs = 0` uses
 * all cores; `budget = 0` uses the default trial-division budget.
 *
 * # Safety
 * `out` must be writable.
 */
enum TwocubesStatus twocubes_search(uint64_t n_max,
                                    uint32_t jobs,
                                    uint64_t budget,
                                    struct TwocubesTable **out);

/**
 * Closed-form roots over the `(a, b)` window, columns `n,a,b,root,N,x,y`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TwocubesStatus twocubes_scan_ab(int64_t a_max,
                                     int64_t b_min,
                                     int64_t n_limit,
                                     struct TwocubesTable **out);

/**
 * Representations of the decimal integer `value`, columns `x,y`.
 *
 * # Safety
 * `value` must be a valid C string, `out` writable.
 */
enum TwocubesStatus twocubes_oracle(const char *value,
                                    bool positive_only,
                                    uint64_t budget,
                                    struct TwocubesTable **out);

/**
 * Rows `1..=count` of one or both families, columns `family,i,n,x,y,eta,N`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TwocubesStatus twocubes_families(uint32_t family,
                                      uint64_t count,
                                      uint32_t method,
                                      struct TwocubesTable **out);

/**
 * Integer roots for every alpha in `[alpha_min, alpha_max]`, columns `alpha,root,n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TwocubesStatus twocubes_alpha_scan(int64_t alpha_min,
                                        int64_t alpha_max,
                                        struct TwocubesTable **out);

/**
 * Consecutive-cube sums up to `n_max` with at least `min_reps` representations,
 * columns `n,N,x,y`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TwocubesStatus twocubes_multi(uint64_t n_max,
                                   uint32_t min_reps,
                                   uint64_t budget,
                                   struct TwocubesTable **out);

/**
 * Checks one record given as decimal strings. Returns `Ok` when it verifies,
 * `VerifyFailed` when it does not.
 *
 * # Safety
 * All pointers must be valid C strings.
 */
enum TwocubesStatus twocubes_verify_record(const char *n,
                                           const char *a,
                                           const char *b,
                                           const char *sum,
                                           const char *x,
                                           const char *y);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWOCUBES_H */
