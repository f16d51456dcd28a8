/* C interface for the de Bruijn covering sequence/array library. */

#ifndef DBC_H
#define DBC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by every fallible call.
 */
typedef enum DbcStatus {
  DBC_STATUS_OK = 0,
  /**
   * The object was built but failed exact verification.
   */
  DBC_STATUS_VERIFICATION_FAILED = 1,
  DBC_STATUS_INVALID_ARGUMENT = 2,
  DBC_STATUS_PARSE_ERROR = 3,
  DBC_STATUS_BUDGET_EXCEEDED = 4,
  DBC_STATUS_IO_ERROR = 5,
  DBC_STATUS_NULL_POINTER = 6,
} DbcStatus;

/**
 * A doubly periodic array plus its declared window shape and radius.
 */
typedef struct DbcArray DbcArray;

/**
 * An exact coverage report.
 */
typedef struct DbcReport DbcReport;

/**
 * A cyclic sequence plus its declared window length and radius.
 */
typedef struct DbcSequence DbcSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the underlying library, static storage.
 */
const char *dbc_version(void);

/**
 * Message describing the most recent failure on this thread.
 */
const char *dbc_last_error(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must come from a `dbc_*` call returning `char*` and not yet be freed.
 */
void dbc_string_free(char *s);

/**
 * Parse a sequence file (`dbcs` header plus digits).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum DbcStatus dbc_sequence_parse(const char *text, struct DbcSequence **out);

/**
 * Build a sequence from digit characters over alphabet `q`, declaring
 * window `n` and radius `r`.
 *
 * # Safety
 * `digits` must be a NUL-terminated string; `out` must be valid.
 */
enum DbcStatus dbc_sequence_from_digits(uint32_t q,
                                        const char *digits,
                                        uint32_t n,
                                        uint32_t r,
                                        struct DbcSequence **out);

/**
 * Catalog sequence for `(n, R)` (variant 1 unless stated otherwise).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum DbcStatus dbc_seed(uint32_t n, uint32_t r, uint32_t variant, struct DbcSequence **out);

/**
 * Binary de Bruijn sequence of order `n` with `pad` extra zeros in its
 * zero run; declared `(n, 0)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum DbcStatus dbc_debruijn(uint32_t n, uintptr_t pad, struct DbcSequence **out);

/**
 * Interleave two sequences; the result is declared
 * `(n_a + n_b, r_a + r_b)` using the handles' declarations.
 *
 * # Safety
 * `a`, `b`, and `out` must be valid pointers.
 */
enum DbcStatus dbc_interleave(const struct DbcSequence *a,
                              const struct DbcSequence *b,
                              struct DbcSequence **out);

/**
 * Period of the sequence.
 *
 * # Safety
 * `seq` must be a valid handle.
 */
uint64_t dbc_sequence_len(const struct DbcSequence *seq);

/**
 * Declared window length.
 *
 * # Safety
 * `seq` must be a valid handle.
 */
uint32_t dbc_sequence_window(const struct DbcSequence *seq);

/**
 * Declared covering radius.
 *
 * # Safety
 * `seq` must be a valid handle.
 */
uint32_t dbc_sequence_radius(const struct DbcSequence *seq);

/**
 * Render the sequence in the text file format. Returns NULL on error.
 *
 * # Safety
 * `seq` must be a valid handle; free the result with `dbc_string_free`.
 */
char *dbc_sequence_render(const struct DbcSequence *seq);

/**
 * Exactly verify the sequence as an `(n, R)` covering sequence.
 *
 * Returns `Ok` with a report handle whether or not the property holds;
 * inspect the report.
 *
 * # Safety
 * `seq` and `out` must be valid pointers.
 */
enum DbcStatus dbc_sequence_check(const struct DbcSequence *seq,
                                  uint32_t n,
                                  uint32_t r,
                                  struct DbcReport **out);

/**
 * Release a sequence handle.
 *
 * # Safety
 * `seq` must come from this library and not be freed twice.
 */
void dbc_sequence_free(struct DbcSequence *seq);

/**
 * Fold the sequence (declared `(m*n, R)`) into a verified `(m, n, R)`
 * covering array.
 *
 * # Safety
 * `seq` and `out` must be valid pointers.
 */
enum DbcStatus dbc_fold(const struct DbcSequence *seq,
                        uint32_t m,
                        uint32_t n,
                        struct DbcArray **out);

/**
 * Stack shifted copies of the sequence into a verified `(2, n, 2R)` array.
 *
 * # Safety
 * `seq` and `out` must be valid pointers.
 */
enum DbcStatus dbc_shift2(const struct DbcSequence *seq, struct DbcArray **out);

/**
 * Parse an array file (`dbca` header plus digit rows).
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be valid.
 */
enum DbcStatus dbc_array_parse(const char *text, struct DbcArray **out);

/**
 * # Safety
 * `arr` must be a valid handle.
 */
uint64_t dbc_array_rows(const struct DbcArray *arr);

/**
 * # Safety
 * `arr` must be a valid handle.
 */
uint64_t dbc_array_cols(const struct DbcArray *arr);

/**
 * Render the array in the text file format. Returns NULL on error.
 *
 * # Safety
 * `arr` must be a valid handle; free the result with `dbc_string_free`.
 */
char *dbc_array_render(const struct DbcArray *arr);

/**
 * Exactly verify the array as an `(m, n, R)` covering array.
 *
 * # Safety
 * `arr` and `out` must be valid pointers.
 */
enum DbcStatus dbc_array_check(const struct DbcArray *arr,
                               uint32_t m,
                               uint32_t n,
                               uint32_t r,
                               struct DbcReport **out);

/**
 * # Safety
 * `arr` must come from this library and not be freed twice.
 */
void dbc_array_free(struct DbcArray *arr);

/**
 * # Safety
 * `rep` must be a valid handle.
 */
bool dbc_report_verified(const struct DbcReport *rep);

/**
 * # Safety
 * `rep` must be a valid handle.
 */
uint32_t dbc_report_achieved_radius(const struct DbcReport *rep);

/**
 * # Safety
 * `rep` must be a valid handle.
 */
uint64_t dbc_report_uncovered(const struct DbcReport *rep);

/**
 * Human-readable report block plus the one-line summary.
 *
 * # Safety
 * `rep` must be a valid handle; free the result with `dbc_string_free`.
 */
char *dbc_report_render(const struct DbcReport *rep);

/**
 * # Safety
 * `rep` must come from this library and not be freed twice.
 */
void dbc_report_free(struct DbcReport *rep);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DBC_H */
