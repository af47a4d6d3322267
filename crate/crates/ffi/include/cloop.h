#ifndef CLOOP_H
#define CLOOP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CloopStatus {
  CLOOP_STATUS_OK = 0,
  CLOOP_STATUS_NULL_POINTER = 1,
  CLOOP_STATUS_INVALID_UTF8 = 2,
  // An element index is out of range for the table.
  CLOOP_STATUS_OUT_OF_RANGE = 3,
  // Malformed text input.
  CLOOP_STATUS_PARSE = 4,
  // Not square, not Latin, or 0 is not neutral.
  CLOOP_STATUS_INVALID_TABLE = 5,
  CLOOP_STATUS_UNKNOWN_NAME = 6,
  // Input exceeds a search bound.
  CLOOP_STATUS_TOO_LARGE = 7,
  // The output buffer is too small; the required length was written.
  CLOOP_STATUS_BUFFER_TOO_SMALL = 8,
  // Any other library error.
  CLOOP_STATUS_FAILED = 9,
  CLOOP_STATUS_PANIC = 10,
} CloopStatus;

// Opaque loop table.
typedef struct CloopTable CloopTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a table from `n * n` row-major entries.
//
// # Safety
// `cells` must point to `n * n` readable values; `out` must be writable.
enum CloopStatus cloop_table_from_rows(const size_t *cells, size_t n, struct CloopTable **out);

// Parses the `.loop` text format.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum CloopStatus cloop_table_parse(const char *text, struct CloopTable **out);

// One of the shipped tables: `steiner10`, `table1_16`, `sedenion_table2`.
//
// # Safety
// `name` must be a nul-terminated string; `out` must be writable.
enum CloopStatus cloop_table_builtin(const char *name, struct CloopTable **out);

// The signed basis loop of Cayley-Dickson level `level` (order `2^(level+1)`).
//
// # Safety
// `out` must be writable.
enum CloopStatus cloop_cayley_dickson_loop(uint32_t level, struct CloopTable **out);

// A C-loop containing an associator of order `n` (`n > 2`).
//
// # Safety
// `out` must be writable.
enum CloopStatus cloop_assoc_loop(size_t n, struct CloopTable **out);

// Releases a table. Null is ignored.
//
// # Safety
// `t` must come from a `cloop_*` constructor and not be freed twice.
void cloop_table_free(struct CloopTable *t);

// Number of elements, or 0 for null.
//
// # Safety
// `t` must be null or a live table.
size_t cloop_table_order(const struct CloopTable *t);

// # Safety
// `t` must be a live table; `out` must be writable.
enum CloopStatus cloop_table_mul(const struct CloopTable *t, size_t x, size_t y, size_t *out);

// Checks a named identity such as `flexible` or `exponent(4)`.
//
// # Safety
// `t` must be a live table, `name` a nul-terminated string, `holds` writable.
enum CloopStatus cloop_check(const struct CloopTable *t, const char *name, bool *holds);

// # Safety
// `t` must be a live table; `holds` must be writable.
enum CloopStatus cloop_is_c_loop(const struct CloopTable *t, bool *holds);

// Writes the nucleus (sorted) into `buf`. `*len` receives its size, also
// when the buffer is too small.
//
// # Safety
// `t` must be a live table; `buf` must have `cap` writable slots; `len` writable.
enum CloopStatus cloop_nucleus(const struct CloopTable *t, size_t *buf, size_t cap, size_t *len);

// Writes the center (sorted) into `buf`, as for `cloop_nucleus`.
//
// # Safety
// As for `cloop_nucleus`.
enum CloopStatus cloop_center(const struct CloopTable *t, size_t *buf, size_t cap, size_t *len);

// Whether the two tables are isomorphic (orders up to 64).
//
// # Safety
// `a` and `b` must be live tables; `out` must be writable.
enum CloopStatus cloop_isomorphic(const struct CloopTable *a,
                                  const struct CloopTable *b,
                                  bool *out);

// Renders the table in the `.loop` format. Free the result with
// `cloop_string_free`.
//
// # Safety
// `t` must be a live table; `out` must be writable.
enum CloopStatus cloop_table_to_string(const struct CloopTable *t, char **out);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void cloop_string_free(char *s);

// The last error on this thread, or null. Valid until the next failing call
// on the same thread; do not free.
const char *cloop_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLOOP_H */
