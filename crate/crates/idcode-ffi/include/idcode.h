/* C interface for the idcode identifying-code library. */

#ifndef IDCODE_H
#define IDCODE_H

/* Generated by cbindgen from crates/idcode-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define IDC_OK 0

/**
 * A required pointer argument was null.
 */
#define IDC_ERR_NULL -1

/**
 * A text argument was not valid UTF-8.
 */
#define IDC_ERR_UTF8 -2

/**
 * The input text or an id in a list failed to parse or was out of range.
 */
#define IDC_ERR_PARSE -3

/**
 * The graph violates a precondition of the requested operation.
 */
#define IDC_ERR_PRECONDITION -4

/**
 * The graph exceeds the exact solver's vertex limit.
 */
#define IDC_ERR_TOO_LARGE -5

/**
 * An internal certification assertion failed; the message has details.
 */
#define IDC_ERR_INTERNAL -6

/**
 * Which construction to run.
 */
typedef enum IdcVariant {
  /**
   * The default pipeline and its bound.
   */
  Main = 0,
  /**
   * Exact bipartition; sharper bound on bipartite inputs.
   */
  Bipartite = 1,
  /**
   * Greedy colouring with the colour count passed separately.
   */
  Chromatic = 2,
  /**
   * Requires the graph to be free of false twins; sharpest bound.
   */
  NoFalseTwins = 3,
} IdcVariant;

/**
 * Opaque graph handle.
 */
typedef struct IdcGraph IdcGraph;

/**
 * Opaque handle to a certified construction result.
 */
typedef struct IdcReport IdcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or null if
 * none has been recorded. The pointer stays valid until the next failing
 * call on the same thread.
 */
const char *idc_last_error_message(void);

/**
 * Parses a graph from text (native edge-list or DIMACS, auto-detected)
 * and stores a new handle in `*out`.
 */
int32_t idc_graph_parse(const char *text, struct IdcGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs laid out as
 * `u0, v0, u1, v1, ...` and stores a new handle in `*out`. `endpoints`
 * may be null only when `edge_count` is zero.
 */
int32_t idc_graph_from_edges(size_t n,
                             const size_t *endpoints,
                             size_t edge_count,
                             struct IdcGraph **out);

/**
 * Releases a graph handle.
 */
void idc_graph_free(struct IdcGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 */
size_t idc_graph_vertex_count(const struct IdcGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 */
size_t idc_graph_edge_count(const struct IdcGraph *g);

/**
 * Maximum degree, or 0 for a null handle.
 */
size_t idc_graph_max_degree(const struct IdcGraph *g);

/**
 * Renders the graph in the canonical native edge-list format. The caller
 * owns the returned string and must release it with `idc_string_free`.
 * Returns null for a null handle.
 */
char *idc_graph_format(const struct IdcGraph *g);

/**
 * Releases a string returned by this library.
 */
void idc_string_free(char *s);

/**
 * Checks whether the `id_count` vertices in `ids` form an identifying
 * code of the graph. Returns 1 if they do, 0 if they do not, or a
 * negative error code (an out-of-range id is a parse error).
 */
int32_t idc_verify(const struct IdcGraph *g, const size_t *ids, size_t id_count);

/**
 * Runs the default construction and stores a report handle in `*out`.
 */
int32_t idc_construct(const struct IdcGraph *g, struct IdcReport **out);

/**
 * Runs the chosen construction variant. `colours` is only read for
 * `Chromatic` and must be at least 2 there; the other variants ignore it.
 */
int32_t idc_construct_with(const struct IdcGraph *g,
                           enum IdcVariant variant,
                           size_t colours,
                           struct IdcReport **out);

/**
 * Releases a report handle.
 */
void idc_report_free(struct IdcReport *r);

/**
 * Number of vertices in the certified code, or 0 for a null handle.
 */
size_t idc_report_code_size(const struct IdcReport *r);

/**
 * Copies the code's vertex ids (ascending) into `buf`, writing at most
 * `cap` entries, and returns the full code size regardless of `cap`.
 */
size_t idc_report_code(const struct IdcReport *r, size_t *buf, size_t cap);

/**
 * The certified size bound as a display value; the underlying comparison
 * was made in exact arithmetic before the report was built. Returns 0.0
 * for a null handle.
 */
double idc_report_bound(const struct IdcReport *r);

/**
 * Which branch produced the code: 1 for the matching branch, 2 for the
 * false-twin branch, 0 for a null handle.
 */
int32_t idc_report_case(const struct IdcReport *r);

/**
 * Vertex count of the input graph, or 0 for a null handle.
 */
size_t idc_report_vertex_count(const struct IdcReport *r);

/**
 * Name of the variant that ran (for example "main" or "bipartite"),
 * owned by the report handle. Returns null for a null handle.
 */
const char *idc_report_variant_name(const struct IdcReport *r);

/**
 * Optional note attached to the run (for example a colouring fallback),
 * owned by the report handle; null when there is none.
 */
const char *idc_report_note(const struct IdcReport *r);

/**
 * The largest vertex count the exact solver accepts by default.
 */
size_t idc_exact_default_limit(void);

/**
 * Computes a minimum identifying code exhaustively. Writes the optimum
 * size to `*out_size` and copies at most `witness_cap` witness ids into
 * `witness_buf` when it is non-null.
 */
int32_t idc_exact(const struct IdcGraph *g,
                  size_t vertex_limit,
                  size_t *out_size,
                  size_t *witness_buf,
                  size_t witness_cap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IDCODE_H */
