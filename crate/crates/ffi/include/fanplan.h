#ifndef FANPLAN_H
#define FANPLAN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum FanplanStatus {
  FANPLAN_STATUS_OK = 0,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  FANPLAN_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Malformed text input; the message carries line and column.
   */
  FANPLAN_STATUS_PARSE_ERROR = 2,
  /**
   * Well-formed input that violates a graph or drawing invariant.
   */
  FANPLAN_STATUS_INVALID_INPUT = 3,
  /**
   * An output buffer is too small.
   */
  FANPLAN_STATUS_BUFFER_TOO_SMALL = 4,
  FANPLAN_STATUS_INTERNAL = 5,
} FanplanStatus;

/**
 * Outcome of a decision procedure.
 */
typedef enum FanplanAnswer {
  FANPLAN_ANSWER_YES = 0,
  FANPLAN_ANSWER_NO = 1,
  /**
   * The order budget ran out first.
   */
  FANPLAN_ANSWER_UNKNOWN = 2,
} FanplanAnswer;

/**
 * Opaque drawing handle.
 */
typedef struct FanplanDrawing FanplanDrawing;

/**
 * Opaque graph handle.
 */
typedef struct FanplanGraph FanplanGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *fanplan_last_error(void);

/**
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void fanplan_string_free(char *s);

/**
 * Builds a graph on `n` vertices from `m` pairs stored flat in `edges` (`2 * m` entries).
 *
 * # Safety
 * `edges` points to `2 * m` readable values (may be null when `m == 0`); `out` is writable.
 */
enum FanplanStatus fanplan_graph_from_edges(size_t n,
                                            const size_t *edges,
                                            size_t m,
                                            struct FanplanGraph **out);

/**
 * Parses edge-list text (`n m` header, then `u v` lines).
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum FanplanStatus fanplan_graph_from_edge_list(const char *text, struct FanplanGraph **out);

/**
 * # Safety
 * `g` is a live graph handle.
 */
size_t fanplan_graph_vertex_count(const struct FanplanGraph *g);

/**
 * # Safety
 * `g` is a live graph handle.
 */
size_t fanplan_graph_edge_count(const struct FanplanGraph *g);

/**
 * # Safety
 * `g` is null or a graph handle not yet freed.
 */
void fanplan_graph_free(struct FanplanGraph *g);

/**
 * Decides outer fan-planarity. `max_orders == 0` means no budget. On a yes
 * answer the circular witness order is copied to `order` (capacity `order_cap`,
 * may be null). `explored` may be null.
 *
 * # Safety
 * `g` is a live handle; `answer_out` is writable; `order` has room for `order_cap` values.
 */
enum FanplanStatus fanplan_decide_outer(const struct FanplanGraph *g,
                                        uint64_t max_orders,
                                        enum FanplanAnswer *answer_out,
                                        size_t *order,
                                        size_t order_cap,
                                        uint64_t *explored);

/**
 * Decides 2-layer fan-planarity. On yes, the layers go to `top` and `bottom`
 * (each of capacity `cap`, may be null) with their lengths in `top_len` and `bottom_len`.
 *
 * # Safety
 * `g` is a live handle; `answer_out` is writable; non-null buffers hold `cap` values.
 */
enum FanplanStatus fanplan_decide_two_layer(const struct FanplanGraph *g,
                                            uint64_t max_orders,
                                            enum FanplanAnswer *answer_out,
                                            size_t *top,
                                            size_t *top_len,
                                            size_t *bottom,
                                            size_t *bottom_len,
                                            size_t cap,
                                            uint64_t *explored);

/**
 * Loads a drawing from its JSON form.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum FanplanStatus fanplan_drawing_from_json(const char *text, struct FanplanDrawing **out);

/**
 * Builds a straight-line drawing from coordinate-file text (`v x y` lines, then edges).
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum FanplanStatus fanplan_drawing_from_coordinates(const char *text, struct FanplanDrawing **out);

/**
 * JSON form of a drawing; release with [`fanplan_string_free`]. Null on failure.
 *
 * # Safety
 * `d` is a live drawing handle.
 */
char *fanplan_drawing_to_json(const struct FanplanDrawing *d);

/**
 * Number of fan-planarity violations (0 means the drawing is fan-planar).
 *
 * # Safety
 * `d` is a live drawing handle; `count` is writable.
 */
enum FanplanStatus fanplan_drawing_validate(const struct FanplanDrawing *d, size_t *count);

/**
 * # Safety
 * `d` is a live drawing handle.
 */
size_t fanplan_drawing_crossing_count(const struct FanplanDrawing *d);

/**
 * # Safety
 * `d` is a live drawing handle.
 */
size_t fanplan_drawing_max_crossings_per_edge(const struct FanplanDrawing *d);

/**
 * Copy of the drawn graph.
 *
 * # Safety
 * `d` is a live drawing handle; `out` is writable.
 */
enum FanplanStatus fanplan_drawing_graph(const struct FanplanDrawing *d, struct FanplanGraph **out);

/**
 * # Safety
 * `d` is null or a drawing handle not yet freed.
 */
void fanplan_drawing_free(struct FanplanDrawing *d);

/**
 * The 2-planar fan-planar drawing of K7.
 *
 * # Safety
 * `out` is writable.
 */
enum FanplanStatus fanplan_gen_k7(struct FanplanDrawing **out);

/**
 * `h` glued K5 blocks; the outer witness order (3h+2 entries) goes to
 * `order` when non-null.
 *
 * # Safety
 * `out` is writable; `order` holds `order_cap` values.
 */
enum FanplanStatus fanplan_gen_glued_k5(size_t h,
                                        struct FanplanGraph **out,
                                        size_t *order,
                                        size_t order_cap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FANPLAN_H */
