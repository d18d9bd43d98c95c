#ifndef LAP1_H
#define LAP1_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Lap1Status {
  LAP1_STATUS_OK = 0,
  LAP1_STATUS_NULL_POINTER = 1,
  LAP1_STATUS_INVALID_UTF8 = 2,
  LAP1_STATUS_PARSE_ERROR = 3,
  LAP1_STATUS_INVALID_GRAPH = 4,
  LAP1_STATUS_PANIC = 5,
} Lap1Status;

// Opaque graph handle.
typedef struct Lap1Graph Lap1Graph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL after a
// success. Valid until the next call into the library from this thread.
const char *lap1_last_error(void);

// Library version as a static NUL-terminated string.
const char *lap1_version(void);

// Parse a graph6 string.
//
// # Safety
// `text` must be NUL-terminated; `out` must be writable.
enum Lap1Status lap1_graph_from_graph6(const char *text, struct Lap1Graph **out);

// Build a graph on `n` vertices from `m` edges given as `2m` endpoints.
//
// # Safety
// `edges` must point to `2 * m` readable values (it may be NULL when `m` is
// 0); `out` must be writable.
enum Lap1Status lap1_graph_from_edges(size_t n,
                                      const size_t *edges,
                                      size_t m,
                                      struct Lap1Graph **out);

// Release a graph. NULL is ignored.
//
// # Safety
// `g` must come from this library and not have been freed already.
void lap1_graph_free(struct Lap1Graph *g);

// Release a string returned by the library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void lap1_string_free(char *s);

// Number of vertices.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum Lap1Status lap1_graph_order(const struct Lap1Graph *g, size_t *out);

// Number of edges.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum Lap1Status lap1_graph_size(const struct Lap1Graph *g, size_t *out);

// graph6 encoding in the handle's own labelling.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum Lap1Status lap1_graph_to_graph6(const struct Lap1Graph *g, char **out);

// graph6 of the canonical labelling; equal for isomorphic graphs.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum Lap1Status lap1_canonical_form(const struct Lap1Graph *g, char **out);

// Multiplicity of 1 as a Laplacian eigenvalue, by exact rank.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum Lap1Status lap1_multiplicity_one(const struct Lap1Graph *g, size_t *out);

// Same multiplicity through the reduction pipeline. When `trace_json` is
// not NULL it receives the reduction trace as JSON.
//
// # Safety
// `g` must be a live handle, `out` writable, `trace_json` NULL or writable.
enum Lap1Status lap1_multiplicity_fast(const struct Lap1Graph *g, size_t *out, char **trace_json);

// Pendant and quasi-pendant vertex counts.
//
// # Safety
// `g` must be a live handle; `p` and `q` writable.
enum Lap1Status lap1_pendant_counts(const struct Lap1Graph *g, size_t *p, size_t *q);

// The reduced graph as a new handle, and `p - q`, the multiplicity lost
// by reducing. `offset` may be NULL.
//
// # Safety
// `g` must be a live handle, `out` writable, `offset` NULL or writable.
enum Lap1Status lap1_reduced_graph(const struct Lap1Graph *g,
                                   struct Lap1Graph **out,
                                   size_t *offset);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LAP1_H */
