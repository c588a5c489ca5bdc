/* C ABI for the lomo harmonic-analysis library. */

#ifndef LOMO_H
#define LOMO_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum LomoStatus {
  LOMO_STATUS_OK = 0,
  LOMO_STATUS_NULL_POINTER = 1,
  LOMO_STATUS_INVALID_ARGUMENT = 2,
  LOMO_STATUS_COMPUTE_ERROR = 3,
} LomoStatus;

/**
 * A sampled function on a periodic grid (opaque).
 */
typedef struct LomoGridFunction LomoGridFunction;

/**
 * A decreasing rearrangement profile (opaque).
 */
typedef struct LomoProfile LomoProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent error on this thread, or NULL when no error
 * has occurred. The pointer is valid until the next failing call on the
 * same thread; do not free it.
 */
const char *lomo_last_error_message(void);

/**
 * Create a grid function from row-major samples. `n_samples` must equal
 * `n_points^dim`. On success `*out` owns the new handle.
 *
 * # Safety
 * `samples` must point to `n_samples` readable doubles and `out` must be a
 * valid writable pointer.
 */
enum LomoStatus lomo_grid_function_create(uintptr_t dim,
                                          double side,
                                          uintptr_t n_points,
                                          const double *samples,
                                          uintptr_t n_samples,
                                          struct LomoGridFunction **out);

/**
 * Release a grid function handle. NULL is accepted and ignored.
 *
 * # Safety
 * `f` must be a handle returned by this library, not yet freed.
 */
void lomo_grid_function_free(struct LomoGridFunction *f);

/**
 * Number of samples held by the grid function.
 *
 * # Safety
 * `f` and `out` must be valid pointers.
 */
enum LomoStatus lomo_grid_function_len(const struct LomoGridFunction *f, uintptr_t *out);

/**
 * Copy the samples into a caller-allocated buffer of length `len`, which
 * must match the value reported by `lomo_grid_function_len`.
 *
 * # Safety
 * `f` must be a valid handle and `buf` must point to `len` writable doubles.
 */
enum LomoStatus lomo_grid_function_copy_samples(const struct LomoGridFunction *f,
                                                double *buf,
                                                uintptr_t len);

/**
 * Apply the fractional maximal operator M_alpha with a geometric family of
 * `radii_count` ball radii. `alpha` must lie in [0, dim).
 *
 * # Safety
 * `f` must be a valid handle and `out` a writable pointer.
 */
enum LomoStatus lomo_fractional_maximal(const struct LomoGridFunction *f,
                                        double alpha,
                                        uintptr_t radii_count,
                                        struct LomoGridFunction **out);

/**
 * Apply the Bochner-Riesz mean with exponent `delta` at scale `r`.
 * `delta` must exceed (dim - 1)/2.
 *
 * # Safety
 * `f` must be a valid handle and `out` a writable pointer.
 */
enum LomoStatus lomo_bochner_riesz(const struct LomoGridFunction *f,
                                   double delta,
                                   double r,
                                   struct LomoGridFunction **out);

/**
 * Compute the decreasing rearrangement of |f| as a step profile.
 *
 * # Safety
 * `f` must be a valid handle and `out` a writable pointer.
 */
enum LomoStatus lomo_rearrange(const struct LomoGridFunction *f, struct LomoProfile **out);

/**
 * Release a profile handle. NULL is accepted and ignored.
 *
 * # Safety
 * `p` must be a handle returned by this library, not yet freed.
 */
void lomo_profile_free(struct LomoProfile *p);

/**
 * Number of steps in the profile.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
enum LomoStatus lomo_profile_len(const struct LomoProfile *p, uintptr_t *out);

/**
 * Copy the profile's breakpoints and step values into two caller-allocated
 * buffers of length `len` (from `lomo_profile_len`).
 *
 * # Safety
 * `p` must be a valid handle; both buffers must hold `len` writable doubles.
 */
enum LomoStatus lomo_profile_copy(const struct LomoProfile *p,
                                  double *breakpoints,
                                  double *values,
                                  uintptr_t len);

/**
 * Evaluate the profile f*(t).
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
enum LomoStatus lomo_profile_value_at(const struct LomoProfile *p, double t, double *out);

/**
 * Evaluate the averaged rearrangement f**(t) = (1/t) int_0^t f*. `t` must
 * be positive.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
enum LomoStatus lomo_profile_double_star(const struct LomoProfile *p, double t, double *out);

/**
 * Lorentz norm ||f||_{L_{p,q}}. Requires p >= 1 and q > 0 (q may be
 * infinity).
 *
 * # Safety
 * `f` and `out` must be valid pointers.
 */
enum LomoStatus lomo_lorentz_norm(const struct LomoGridFunction *f,
                                  double p,
                                  double q,
                                  double *out);

/**
 * Lorentz-Morrey norm via a center/radius sweep with the given per-axis
 * center stride and geometric radius count.
 *
 * # Safety
 * `f` and `out` must be valid pointers.
 */
enum LomoStatus lomo_lorentz_morrey_norm(const struct LomoGridFunction *f,
                                         double p,
                                         double q,
                                         double lambda,
                                         uintptr_t centers_stride,
                                         uintptr_t radii_count,
                                         double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOMO_H */
