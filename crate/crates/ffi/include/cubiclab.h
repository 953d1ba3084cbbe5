#ifndef CUBICLAB_H
#define CUBICLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CubiclabStatus {
  CUBICLAB_STATUS_OK = 0,
  CUBICLAB_STATUS_NULL_POINTER = 1,
  CUBICLAB_STATUS_INVALID_UTF8 = 2,
  CUBICLAB_STATUS_SYNTAX = 3,
  CUBICLAB_STATUS_UNKNOWN_NAME = 4,
  CUBICLAB_STATUS_INVALID_ARGUMENT = 5,
  CUBICLAB_STATUS_RING_MISMATCH = 6,
  CUBICLAB_STATUS_CONTAINMENT = 7,
  CUBICLAB_STATUS_BUDGET = 8,
  CUBICLAB_STATUS_RETRIES_EXHAUSTED = 9,
  CUBICLAB_STATUS_COMPUTATION = 10,
  CUBICLAB_STATUS_PANIC = 11,
} CubiclabStatus;

/**
 * An ideal of a [`CubiclabRing`].
 */
typedef struct CubiclabIdeal CubiclabIdeal;

/**
 * A polynomial ring.
 */
typedef struct CubiclabRing CubiclabRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *cubiclab_last_error(void);

/**
 * Static version string.
 */
const char *cubiclab_version(void);

/**
 * Ring in the variables `vars` (`x_0..x_5` or `a,b,c`) over the rationals
 * when `prime` is 0, otherwise over the field with `prime` elements.
 *
 * # Safety
 * `vars` must be a nul-terminated string and `out` writable.
 */
enum CubiclabStatus cubiclab_ring_new(const char *vars, uint32_t prime, struct CubiclabRing **out);

/**
 * # Safety
 * `ring` must come from [`cubiclab_ring_new`] and not be freed twice.
 */
void cubiclab_ring_free(struct CubiclabRing *ring);

/**
 * Ideal generated by a comma or newline separated list of polynomials.
 *
 * # Safety
 * `ring` must be a live handle, `gens` a nul-terminated string and `out`
 * writable.
 */
enum CubiclabStatus cubiclab_ideal_parse(const struct CubiclabRing *ring,
                                         const char *gens,
                                         struct CubiclabIdeal **out);

/**
 * Catalog entry by name (`scroll:s22`, `delpezzo`, `plane:a`, ...), in
 * the ring of rational polynomials in `x_0..x_5`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` writable.
 */
enum CubiclabStatus cubiclab_ideal_catalog(const char *name, struct CubiclabIdeal **out);

/**
 * # Safety
 * `ideal` must come from this library and not be freed twice.
 */
void cubiclab_ideal_free(struct CubiclabIdeal *ideal);

/**
 * Saturation by the irrelevant ideal.
 *
 * # Safety
 * `ideal` must be a live handle and `out` writable.
 */
enum CubiclabStatus cubiclab_ideal_saturate(const struct CubiclabIdeal *ideal,
                                            struct CubiclabIdeal **out);

/**
 * Sum of two ideals of the same ring.
 *
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum CubiclabStatus cubiclab_ideal_sum(const struct CubiclabIdeal *a,
                                       const struct CubiclabIdeal *b,
                                       struct CubiclabIdeal **out);

/**
 * Projective dimension (-1 for the empty scheme) and degree.
 *
 * # Safety
 * `ideal` must be a live handle; `dim` and `degree` writable.
 */
enum CubiclabStatus cubiclab_ideal_dim_degree(const struct CubiclabIdeal *ideal,
                                              int64_t *dim,
                                              uint64_t *degree);

/**
 * Whether `a ⊆ b`.
 *
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum CubiclabStatus cubiclab_ideal_is_subset(const struct CubiclabIdeal *a,
                                             const struct CubiclabIdeal *b,
                                             bool *out);

/**
 * Smoothness of the projective scheme. Over the rationals a non-exact
 * check reduces modulo a fixed prime first; `certified` reports whether
 * the answer was computed exactly.
 *
 * # Safety
 * `ideal` must be a live handle; `smooth` and `certified` writable.
 */
enum CubiclabStatus cubiclab_ideal_is_smooth(const struct CubiclabIdeal *ideal,
                                             bool exact,
                                             bool *smooth,
                                             bool *certified);

/**
 * Generators as a newline separated string, released with
 * [`cubiclab_string_free`].
 *
 * # Safety
 * `ideal` must be a live handle and `out` writable.
 */
enum CubiclabStatus cubiclab_ideal_to_string(const struct CubiclabIdeal *ideal, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void cubiclab_string_free(char *s);

/**
 * Discriminant of `⟨h², S, P⟩` for a quintic del Pezzo `S` and a plane
 * `P` with `S·P = beta`.
 */
int64_t cubiclab_del_pezzo_discriminant(int64_t beta);

/**
 * Self-intersection of a smooth surface in a cubic fourfold.
 */
int64_t cubiclab_self_int_cubic(int64_t h2, int64_t hk, int64_t k2, int64_t chi_top);

/**
 * Self-intersection of a smooth surface in a quadric fourfold.
 */
int64_t cubiclab_self_int_quadric(int64_t h2, int64_t hk, int64_t k2, int64_t chi_o);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBICLAB_H */
