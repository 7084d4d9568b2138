#ifndef ORBITAL_CHROMATIC_H
#define ORBITAL_CHROMATIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum OcStatus {
  OC_STATUS_OK = 0,
  OC_STATUS_NULL_POINTER = 1,
  OC_STATUS_DOMAIN = 2,
  OC_STATUS_NOT_PRIME = 3,
  OC_STATUS_CAPACITY = 4,
  OC_STATUS_PARSE = 5,
  OC_STATUS_INTERNAL = 6,
} OcStatus;

/**
 * Opaque multigraph handle.
 */
typedef struct OcGraph OcGraph;

/**
 * Opaque permutation group handle.
 */
typedef struct OcGroup OcGroup;

/**
 * Opaque rational polynomial handle.
 */
typedef struct OcPoly OcPoly;

/**
 * Message describing the last failed call on this thread, or an empty
 * string. Valid until the next library call on the same thread.
 */
const char *oc_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void oc_string_free(char *s);

/**
 * Edgeless graph on `vertices` vertices.
 */
struct OcGraph *oc_graph_new(size_t vertices);

/**
 * The `n`-cycle (a loop for `n = 1`, a double edge for `n = 2`).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum OcStatus oc_graph_cycle(size_t n, struct OcGraph **out);

/**
 * Parses `{"vertices": n, "edges": [[u, v], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum OcStatus oc_graph_from_json(const char *json, struct OcGraph **out);

/**
 * Adds the edge `{u, v}`; `u == v` adds a loop.
 *
 * # Safety
 * `graph` must be a live handle.
 */
enum OcStatus oc_graph_add_edge(struct OcGraph *graph, size_t u, size_t v);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t oc_graph_vertex_count(const struct OcGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t oc_graph_edge_count(const struct OcGraph *graph);

/**
 * Graph in the JSON interchange format; free with `oc_string_free`.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
char *oc_graph_to_json(const struct OcGraph *graph);

/**
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void oc_graph_free(struct OcGraph *graph);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum OcStatus oc_group_rotations(size_t n, struct OcGroup **out);

/**
 * Full automorphism group of the `n`-cycle.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum OcStatus oc_group_cycle_automorphisms(size_t n, struct OcGroup **out);

/**
 * Group from `count` image lists of length `degree`, stored back to back
 * in `images`. Rejected unless the elements form a group.
 *
 * # Safety
 * `images` must point to `count * degree` readable values; `out` must be
 * valid for writes.
 */
enum OcStatus oc_group_from_images(size_t degree,
                                   const size_t *images,
                                   size_t count,
                                   struct OcGroup **out);

/**
 * # Safety
 * `group` must be null or a live handle.
 */
size_t oc_group_order(const struct OcGroup *group);

/**
 * # Safety
 * `group` must be null or a handle not yet freed.
 */
void oc_group_free(struct OcGroup *group);

/**
 * # Safety
 * `graph` must be a live handle; `out` must be valid for writes.
 */
enum OcStatus oc_chromatic_polynomial(const struct OcGraph *graph, struct OcPoly **out);

/**
 * Quotient of `graph` by the permutation with the given image list.
 *
 * # Safety
 * `graph` must be a live handle, `images` must point to `degree` readable
 * values and `out` must be valid for writes.
 */
enum OcStatus oc_quotient_graph(const struct OcGraph *graph,
                                const size_t *images,
                                size_t degree,
                                struct OcGraph **out);

/**
 * # Safety
 * `graph` and `group` must be live handles; `out` must be valid for writes.
 */
enum OcStatus oc_orbital_by_definition(const struct OcGraph *graph,
                                       const struct OcGroup *group,
                                       struct OcPoly **out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum OcStatus oc_orbital_rotation_closed(size_t n, struct OcPoly **out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum OcStatus oc_orbital_full_closed(size_t n, struct OcPoly **out);

/**
 * Brute-force count of proper colorings with `lambda` colors.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be valid for writes.
 */
enum OcStatus oc_count_proper_colorings(const struct OcGraph *graph,
                                        uint64_t lambda,
                                        uint64_t *out);

/**
 * Brute-force count of coloring classes under the group.
 *
 * # Safety
 * `graph` and `group` must be live handles; `out` must be valid for writes.
 */
enum OcStatus oc_count_coloring_orbits(const struct OcGraph *graph,
                                       const struct OcGroup *group,
                                       uint64_t lambda,
                                       uint64_t *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum OcStatus oc_fermat_check(uint64_t p, uint64_t lambda_max, bool *out);

/**
 * Degree, or -1 for the zero polynomial (and for a null handle).
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
int64_t oc_poly_degree(const struct OcPoly *poly);

/**
 * # Safety
 * `a` and `b` must be null or live handles.
 */
bool oc_poly_equal(const struct OcPoly *a, const struct OcPoly *b);

/**
 * `{"den": D, "coeffs": [c0, ...]}`; free with `oc_string_free`.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
char *oc_poly_to_json(const struct OcPoly *poly);

/**
 * Human-readable rendering; free with `oc_string_free`.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
char *oc_poly_render(const struct OcPoly *poly, bool ascii);

/**
 * Exact value at an integer point, as `"a"` or `"a/b"`; free with
 * `oc_string_free`.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
char *oc_poly_eval(const struct OcPoly *poly, int64_t x);

/**
 * # Safety
 * `poly` must be null or a handle not yet freed.
 */
void oc_poly_free(struct OcPoly *poly);

#endif  /* ORBITAL_CHROMATIC_H */
