#ifndef MAXPI_H
#define MAXPI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MaxpiStatus {
  MAXPI_STATUS_OK = 0,
  MAXPI_STATUS_NULL_POINTER = 1,
  MAXPI_STATUS_INVALID_ARGUMENT = 2,
  MAXPI_STATUS_PARSE_ERROR = 3,
  MAXPI_STATUS_INVALID_CONSTANTS = 4,
  MAXPI_STATUS_CAP_EXCEEDED = 5,
  MAXPI_STATUS_BUFFER_TOO_SMALL = 6,
  MAXPI_STATUS_INTERNAL = 7,
} MaxpiStatus;

/**
 * Opaque hereditary-class handle.
 */
typedef struct MaxpiClass MaxpiClass;

/**
 * Opaque graph handle.
 */
typedef struct MaxpiGraph MaxpiGraph;

/**
 * Opaque solver result.
 */
typedef struct MaxpiSolution MaxpiSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. Valid until
 * the next call into this library on the same thread.
 */
const char *maxpi_last_error(void);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2 * m` endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be null when `m == 0`)
 * and `out` must be writable.
 */
enum MaxpiStatus maxpi_graph_from_edges(size_t n,
                                        const size_t *edges,
                                        size_t m,
                                        struct MaxpiGraph **out);

/**
 * Parses the `p edge` / `e u v` text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum MaxpiStatus maxpi_graph_parse(const char *text, struct MaxpiGraph **out);

/**
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t maxpi_graph_vertex_count(const struct MaxpiGraph *g);

/**
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void maxpi_graph_free(struct MaxpiGraph *g);

/**
 * Creates `chordal` or `interval`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum MaxpiStatus maxpi_class_new(const char *name, struct MaxpiClass **out);

/**
 * Members of `base` that additionally contain no induced copy of any of
 * the `len` graphs in `family`.
 *
 * # Safety
 * `base` must be live, `family` must point to `len` live graph handles
 * (or be null when `len == 0`) and `out` must be writable.
 */
enum MaxpiStatus maxpi_class_with_overlay(const struct MaxpiClass *base,
                                          const struct MaxpiGraph *const *family,
                                          size_t len,
                                          struct MaxpiClass **out);

/**
 * # Safety
 * `c` must be null or a handle not yet freed.
 */
void maxpi_class_free(struct MaxpiClass *c);

/**
 * Solves `g` for `class`. `mode` is one of `auto`, `structured`, `brute`,
 * `forced-B1`, `forced-B2`; null means `auto`. `constants` is the text of a
 * constants file; null means the defaults.
 *
 * # Safety
 * Handles must be live, strings NUL-terminated or null, `out` writable.
 */
enum MaxpiStatus maxpi_solve(const struct MaxpiGraph *g,
                             const struct MaxpiClass *class_,
                             const char *mode,
                             const char *constants,
                             struct MaxpiSolution **out);

/**
 * # Safety
 * `s` must be null or a live solution handle.
 */
size_t maxpi_solution_size(const struct MaxpiSolution *s);

/**
 * Copies the solution's vertices, ascending, into `buf`. `*written`
 * receives the solution size; if `cap` is smaller nothing is copied and
 * `BufferTooSmall` is returned.
 *
 * # Safety
 * `buf` must have room for `cap` values (or be null when `cap == 0`);
 * `written` must be writable.
 */
enum MaxpiStatus maxpi_solution_vertices(const struct MaxpiSolution *s,
                                         size_t *buf,
                                         size_t cap,
                                         size_t *written);

/**
 * Branch counters and timings as a JSON object. Free with
 * [`maxpi_string_free`]. Null on failure.
 *
 * # Safety
 * `s` must be null or a live solution handle.
 */
char *maxpi_solution_stats_json(const struct MaxpiSolution *s);

/**
 * # Safety
 * `s` must be null or a string handed out by this library, not yet freed.
 */
void maxpi_string_free(char *s);

/**
 * # Safety
 * `s` must be null or a handle not yet freed.
 */
void maxpi_solution_free(struct MaxpiSolution *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAXPI_H */
