#ifndef FERRERS_RSK_H
#define FERRERS_RSK_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible call.
typedef enum FrskStatus {
  FRSK_STATUS_OK = 0,
  // A required pointer argument was null.
  FRSK_STATUS_NULL_POINTER = 1,
  // Arguments failed validation; see `frsk_last_error_message`.
  FRSK_STATUS_INVALID_ARGUMENT = 2,
  // Inputs were structurally valid but outside the operation's domain.
  FRSK_STATUS_DOMAIN = 3,
  // Input exceeds a guarded size limit.
  FRSK_STATUS_CAPACITY = 4,
  // The inverse search exhausted its space without a preimage.
  FRSK_STATUS_NOT_FOUND = 5,
  // The output buffer is too small; required length was reported.
  FRSK_STATUS_BUFFER_TOO_SMALL = 6,
} FrskStatus;

// A Coxeter element of a symmetric group (opaque).
typedef struct FrskCoxeter FrskCoxeter;

// A weighted acyclic digraph (opaque).
typedef struct FrskDag FrskDag;

// A filling of a partition's diagram (opaque).
typedef struct FrskFilling FrskFilling;

// An integer partition (opaque).
typedef struct FrskPartition FrskPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread.
const char *frsk_last_error_message(void);

// Builds a partition from weakly decreasing positive parts.
//
// # Safety
// `parts` must point to `len` readable values; `out` must be writable.
enum FrskStatus frsk_partition_new(const uint64_t *parts, size_t len, struct FrskPartition **out);

// # Safety
// `p` must be a handle from `frsk_partition_new` (or null) not yet freed.
void frsk_partition_free(struct FrskPartition *p);

// Hook length of the box (1,1).
//
// # Safety
// `p` must be a live partition handle; `out` must be writable.
enum FrskStatus frsk_partition_hook_length(const struct FrskPartition *p, uint64_t *out);

// Number of boxes in the diagram.
//
// # Safety
// `p` must be a live partition handle; `out` must be writable.
enum FrskStatus frsk_partition_box_count(const struct FrskPartition *p, size_t *out);

// Builds a filling from row-major box values (row 1 first).
//
// # Safety
// `shape` must be a live partition handle; `values` must hold `len`
// readable entries; `out` must be writable.
enum FrskStatus frsk_filling_new(const struct FrskPartition *shape,
                                 const uint64_t *values,
                                 size_t len,
                                 struct FrskFilling **out);

// # Safety
// `f` must be a handle from a `frsk_*` constructor (or null) not yet freed.
void frsk_filling_free(struct FrskFilling *f);

// Row-major box values; reports the required length in `written`.
//
// # Safety
// `f` must be a live filling handle; `buf` must hold `capacity` writable
// entries; `written` must be writable.
enum FrskStatus frsk_filling_values(const struct FrskFilling *f,
                                    uint64_t *buf,
                                    size_t capacity,
                                    size_t *written);

// Whether the filling weakly increases along rows and columns.
//
// # Safety
// `f` must be a live filling handle; `out` must be writable.
enum FrskStatus frsk_filling_is_rpp(const struct FrskFilling *f, bool *out);

// Classical correspondence: filling to reverse plane partition.
//
// # Safety
// `f` must be a live filling handle; `out` must be writable.
enum FrskStatus frsk_gansner_rsk(const struct FrskFilling *f, struct FrskFilling **out);

// Coxeter-parametrized correspondence; the element's degree must be the
// shape's hook length plus one.
//
// # Safety
// `c` and `f` must be live handles; `out` must be writable.
enum FrskStatus frsk_coxeter_rsk(const struct FrskCoxeter *c,
                                 const struct FrskFilling *f,
                                 struct FrskFilling **out);

// Inverts the classical map (`c` null) or the Coxeter map for `c`.
// Returns `NOT_FOUND` when the target has no preimage within bounds and
// `CAPACITY` when the shape or entries exceed the search guard.
//
// # Safety
// `g` must be a live filling handle; `c` may be null; `out` writable.
enum FrskStatus frsk_invert_rsk(const struct FrskCoxeter *c,
                                const struct FrskFilling *g,
                                struct FrskFilling **out);

// Builds a Coxeter element from its long cycle rooted at 1.
//
// # Safety
// `values` must hold `len` readable entries; `out` must be writable.
enum FrskStatus frsk_coxeter_from_cycle(const uint64_t *values,
                                        size_t len,
                                        struct FrskCoxeter **out);

// Builds a Coxeter element from a word in adjacent transpositions.
//
// # Safety
// `letters` must hold `len` readable entries; `out` must be writable.
enum FrskStatus frsk_coxeter_from_word(const uint64_t *letters,
                                       size_t len,
                                       struct FrskCoxeter **out);

// # Safety
// `c` must be a handle from a `frsk_*` constructor (or null) not yet freed.
void frsk_coxeter_free(struct FrskCoxeter *c);

// Degree `n` of the symmetric group the element lives in.
//
// # Safety
// `c` must be a live Coxeter handle; `out` must be writable.
enum FrskStatus frsk_coxeter_degree(const struct FrskCoxeter *c, size_t *out);

// The long cycle rooted at 1; reports the required length in `written`.
//
// # Safety
// `c` must be a live Coxeter handle; `buf` must hold `capacity` writable
// entries; `written` must be writable.
enum FrskStatus frsk_coxeter_cycle(const struct FrskCoxeter *c,
                                   uint64_t *buf,
                                   size_t capacity,
                                   size_t *written);

// The inverse element.
//
// # Safety
// `c` must be a live Coxeter handle; `out` must be writable.
enum FrskStatus frsk_coxeter_inverse(const struct FrskCoxeter *c, struct FrskCoxeter **out);

// The element whose correspondence coincides with the classical one.
//
// # Safety
// `shape` must be a live partition handle; `out` must be writable.
enum FrskStatus frsk_special_coxeter(const struct FrskPartition *shape, struct FrskCoxeter **out);

// Builds a weighted DAG from vertex weights and flattened arc pairs
// `[from0, to0, from1, to1, ..]` of zero-based ids.
//
// # Safety
// `weights` must hold `vertex_count` entries and `arcs` must hold
// `2 * arc_count` entries; `out` must be writable.
enum FrskStatus frsk_dag_new(const uint64_t *weights,
                             size_t vertex_count,
                             const size_t *arcs,
                             size_t arc_count,
                             struct FrskDag **out);

// # Safety
// `dag` must be a handle from `frsk_dag_new` (or null) not yet freed.
void frsk_dag_free(struct FrskDag *dag);

// Parts of the Greene-Kleitman invariant, one per level up to the
// antichain width; reports the required length in `written`.
//
// # Safety
// `dag` must be a live DAG handle; `buf` must hold `capacity` writable
// entries; `written` must be writable.
enum FrskStatus frsk_gk_parts(const struct FrskDag *dag,
                              uint64_t *buf,
                              size_t capacity,
                              size_t *written);

// Maximum support weight over `ell`-tuples of paths.
//
// # Safety
// `dag` must be a live DAG handle; `out` must be writable.
enum FrskStatus frsk_max_weight_paths(const struct FrskDag *dag, size_t ell, uint64_t *out);

// Maximum antichain size.
//
// # Safety
// `dag` must be a live DAG handle; `out` must be writable.
enum FrskStatus frsk_antichain_width(const struct FrskDag *dag, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FERRERS_RSK_H */
