#ifndef NESTEX_H
#define NESTEX_H

/* Generated by cbindgen from the nestex-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum NxStatus {
  NxStatus_Ok = 0,
  NxStatus_NullPointer = 1,
  NxStatus_InvalidArgument = 2,
  NxStatus_ParseError = 3,
  NxStatus_VerifyFailed = 4,
  NxStatus_Panic = 5,
} NxStatus;

/**
 * Opaque built-lattice handle (a lattice with a validated building set).
 */
typedef struct NxBuilt NxBuilt;

/**
 * Opaque simplicial complex handle.
 */
typedef struct NxComplex NxComplex;

/**
 * Opaque lattice handle.
 */
typedef struct NxLattice NxLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * ABI version, major in the upper 16 bits.
 */
uint32_t nx_abi_version(void);

/**
 * The last error message on this thread; valid until the next failing call.
 */
const char *nx_last_error(void);

/**
 * Free a string returned by this library.
 *
 * # Safety
 * `s` must have been returned by a `*_to_json` function of this library and
 * not freed before.
 */
void nx_string_free(char *s);

/**
 * Partition lattice Π_n on {1, …, n}.
 */
enum NxStatus nx_lattice_partition(uint32_t n, struct NxLattice **out);

/**
 * Boolean lattice of subsets of {1, …, n}.
 */
enum NxStatus nx_lattice_boolean(uint32_t n, struct NxLattice **out);

/**
 * Lattice of flats of the uniform matroid U_{r,n}.
 */
enum NxStatus nx_lattice_uniform_flats(uint32_t r, uint32_t n, struct NxLattice **out);

/**
 * Build a lattice from its JSON form `{"labels": […], "covers": [[a,b], …]}`.
 */
enum NxStatus nx_lattice_from_json(const char *json, struct NxLattice **out);

/**
 * Serialize a lattice to JSON; free the string with `nx_string_free`.
 */
enum NxStatus nx_lattice_to_json(const struct NxLattice *l, char **out);

/**
 * Number of elements.
 */
uintptr_t nx_lattice_size(const struct NxLattice *l);

/**
 * Destroy a lattice handle. Null is a no-op.
 *
 * # Safety
 * `l` must come from this library and not be freed twice.
 */
void nx_lattice_free(struct NxLattice *l);

/**
 * Attach a building set: selector is `"min"`, `"max"`, or a comma-separated
 * list of element labels (validated).
 */
enum NxStatus nx_built_new(const struct NxLattice *l, const char *selector, struct NxBuilt **out);

/**
 * Destroy a built-lattice handle. Null is a no-op.
 *
 * # Safety
 * `b` must come from this library and not be freed twice.
 */
void nx_built_free(struct NxBuilt *b);

/**
 * The nested set complex N(L, G), or the cone complex cN(L, G).
 */
enum NxStatus nx_nested_complex(const struct NxBuilt *b, bool cone, struct NxComplex **out);

/**
 * Dimension of the complex (−1 for `{∅}`).
 */
int64_t nx_complex_dim(const struct NxComplex *c);

uintptr_t nx_complex_facet_count(const struct NxComplex *c);

/**
 * Face counts by cardinality, `f[0] = 1` for the empty face. Call with
 * `cap = 0` to learn the length through `written`.
 */
enum NxStatus nx_complex_f_vector(const struct NxComplex *c,
                                  int64_t *buf,
                                  uintptr_t cap,
                                  uintptr_t *written);

/**
 * The h-vector (full length, trailing zeros kept).
 */
enum NxStatus nx_complex_h_vector(const struct NxComplex *c,
                                  int64_t *buf,
                                  uintptr_t cap,
                                  uintptr_t *written);

/**
 * Serialize a complex to `{"vertices": […], "facets": [[…], …]}`.
 */
enum NxStatus nx_complex_to_json(const struct NxComplex *c, char **out);

/**
 * Destroy a complex handle. Null is a no-op.
 *
 * # Safety
 * `c` must come from this library and not be freed twice.
 */
void nx_complex_free(struct NxComplex *c);

/**
 * Build a vertex-decomposition certificate with the default admissible map
 * and verify it against the nested set complex.
 */
enum NxStatus nx_vd_certify(const struct NxBuilt *b);

/**
 * Build a convex ear decomposition for the natural atom order and verify it.
 */
enum NxStatus nx_ced_certify(const struct NxBuilt *b);

/**
 * Coefficients of the n-th second Eulerian polynomial, lowest degree first.
 */
enum NxStatus nx_second_eulerian(uint32_t n, int64_t *buf, uintptr_t cap, uintptr_t *written);

/**
 * Exhaustive ψ/Φ bijection and descent-preservation check against
 * `(Π_{n+1}, G_min)`; n ≤ 5.
 */
enum NxStatus nx_stirling_bijection_check(uint32_t n);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NESTEX_H */
