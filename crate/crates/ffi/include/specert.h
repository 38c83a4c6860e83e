#ifndef SPECERT_H
#define SPECERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every function.
 */
typedef enum SpecertStatus {
  SPECERT_STATUS_OK = 0,
  SPECERT_STATUS_NULL_POINTER = 1,
  SPECERT_STATUS_INVALID_INPUT = 2,
  SPECERT_STATUS_PARSE = 3,
  SPECERT_STATUS_DOMAIN = 4,
  SPECERT_STATUS_NOT_CONVERGED = 5,
  SPECERT_STATUS_CAPACITY = 6,
  SPECERT_STATUS_NUMERIC = 7,
  SPECERT_STATUS_INTERNAL = 8,
} SpecertStatus;

/**
 * Opaque bipartite graph with a fixed `(X, Y)` split.
 */
typedef struct SpecertBipartite SpecertBipartite;

/**
 * Opaque simple graph.
 */
typedef struct SpecertGraph SpecertGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *specert_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be freed twice.
 */
void specert_string_free(char *s);

/**
 * Parses one graph6 string (the `>>graph6<<` header is accepted).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SpecertStatus specert_graph_from_graph6(const char *text, struct SpecertGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must hold `2 * edge_count` values (it may be NULL when
 * `edge_count` is 0); `out` must be writable.
 */
enum SpecertStatus specert_graph_from_edges(size_t n,
                                            const size_t *edges,
                                            size_t edge_count,
                                            struct SpecertGraph **out);

/**
 * Releases a graph handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and must not be freed twice.
 */
void specert_graph_free(struct SpecertGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_graph_order(const struct SpecertGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_graph_edge_count(const struct SpecertGraph *g, size_t *out);

/**
 * graph6 encoding, released with [`specert_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_graph_to_graph6(const struct SpecertGraph *g, char **out);

/**
 * `rho(aD + A)` by certified power iteration. A `tol` of 0 or less
 * selects the default tolerance.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_spectral_radius(const struct SpecertGraph *g,
                                           double a,
                                           double tol,
                                           double *out);

/**
 * `sqrt(2m - n + 1)`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_hong_bound(const struct SpecertGraph *g, double *out);

/**
 * `2m / (n - 1) + n - 2`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_das_bound(const struct SpecertGraph *g, double *out);

/**
 * `K_1 ∇ (K_{n-k-1} ∪ k K_1)`, the extremal graph without a
 * spanning k-tree.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpecertStatus specert_ktree_extremal(size_t n, size_t k, struct SpecertGraph **out);

/**
 * `K_{s+1,s} ∇₁ K_{n-s-1,n-s}`, balanced with `n` vertices per side and
 * no perfect matching.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpecertStatus specert_matching_extremal(size_t n, size_t s, struct SpecertBipartite **out);

/**
 * Builds a bipartite graph from pairs `(x, y)` with `x < nx`, `y < ny`,
 * stored flat in `edges`.
 *
 * # Safety
 * `edges` must hold `2 * edge_count` values (it may be NULL when
 * `edge_count` is 0); `out` must be writable.
 */
enum SpecertStatus specert_bipartite_from_edges(size_t nx,
                                                size_t ny,
                                                const size_t *edges,
                                                size_t edge_count,
                                                struct SpecertBipartite **out);

/**
 * Releases a bipartite handle. NULL is ignored.
 *
 * # Safety
 * `b` must come from this library and must not be freed twice.
 */
void specert_bipartite_free(struct SpecertBipartite *b);

/**
 * The underlying simple graph, `X` labelled `0..nx` and `Y` after it.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_bipartite_to_graph(const struct SpecertBipartite *b,
                                              struct SpecertGraph **out);

/**
 * Searches for a spanning tree with maximum degree `<= k`. On success `out`
 * receives the `ktree` certificate as JSON, or NULL if none exists.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_find_k_tree(const struct SpecertGraph *g, size_t k, char **out);

/**
 * Searches for a set `S` with `c(G - S) > (k - 2)|S| + 2`. On success `out`
 * receives the `win_violator` certificate as JSON, or NULL if none exists.
 * `cap` bounds the order searched; 0 selects the library default.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_find_win_violator(const struct SpecertGraph *g,
                                             size_t k,
                                             size_t cap,
                                             char **out);

/**
 * Either a `matching` or a `hall_violator` certificate as JSON.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum SpecertStatus specert_certify_matching(const struct SpecertBipartite *b, char **out);

/**
 * Closed-form adjacency spectral radius of the matching-extremal graph.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpecertStatus specert_rho_matching_extremal(size_t n, size_t delta, double *out);

/**
 * Closed-form signless Laplacian spectral radius of the same graph.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpecertStatus specert_q_matching_extremal(size_t n, size_t delta, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPECERT_H */
