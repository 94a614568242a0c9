#ifndef CUBEFAREY_H
#define CUBEFAREY_H

/* Generated by cbindgen from crates/cubefarey-ffi; regenerate with `cbindgen --crate cubefarey-ffi --output include/cubefarey.h` run in that directory. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code returned by every function in this library.
 */
typedef enum CfStatus {
  /**
   * The call succeeded.
   */
  CfStatus_Ok = 0,
  /**
   * An input string failed to parse, or it described an unusable field,
   * point, or exponent (reducible polynomial, no such real root, ...).
   */
  CfStatus_InvalidInput = 1,
  /**
   * Iteration reached the step cap without the state repeating. The
   * orbit handle is still produced so the digits seen so far can be read,
   * but preperiod, period, charpoly and Pisot data are unavailable.
   */
  CfStatus_CapExceeded = 2,
  /**
   * An exact-arithmetic invariant failed; this signals a bug, not bad
   * input.
   */
  CfStatus_Arithmetic = 3,
  /**
   * A required pointer argument was null.
   */
  CfStatus_NullPointer = 4,
  /**
   * An input string was not valid UTF-8.
   */
  CfStatus_BadEncoding = 5,
  /**
   * A panic was caught at the boundary.
   */
  CfStatus_Panicked = 6,
} CfStatus;

/**
 * One computed orbit: the digit sequence together with, when the orbit is
 * periodic, its period data. Opaque; create with [`cubefarey_orbit_compute`]
 * and release with [`cubefarey_orbit_free`].
 */
typedef struct CfOrbit CfOrbit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Runs the expansion from the point (alpha, beta) until the state repeats
 * or `cap` steps have been taken, and stores the outcome in `*out`.
 *
 * `field` holds the coefficients "c0,c1,c2" of the defining polynomial
 * x^3 + c2 x^2 + c1 x + c0, each a rational. `root` selects which real root
 * of that polynomial the field embeds through: 0 means the largest, k >= 1
 * means the k-th in increasing order. `alpha` and `beta` are coordinate
 * triples "a0,a1,a2" meaning a0 + a1 x + a2 x^2, and `r` is the exponent
 * "p/q" steering digit selection (pass "5/2" for the default).
 *
 * Returns `Ok` when a period was found and `CapExceeded` when the cap
 * stopped iteration first; in both cases `*out` receives a handle that the
 * caller owns. On any other status `*out` is set to null.
 */
enum CfStatus cubefarey_orbit_compute(const char *field,
                                      size_t root,
                                      const char *alpha,
                                      const char *beta,
                                      const char *r,
                                      size_t cap,
                                      struct CfOrbit **out);

/**
 * Number of digits the expansion produced. Always available, including
 * when the computation stopped at the cap.
 */
enum CfStatus cubefarey_orbit_digit_count(const struct CfOrbit *orbit, size_t *count);

/**
 * Writes the k-th digit (0-based) as its index pair. Fails with
 * `InvalidInput` when `k` is out of range.
 */
enum CfStatus cubefarey_orbit_digit(const struct CfOrbit *orbit, size_t k, uint8_t *i, uint8_t *j);

/**
 * Number of steps before the periodic part starts. `CapExceeded` when no
 * period was found.
 */
enum CfStatus cubefarey_orbit_preperiod(const struct CfOrbit *orbit, size_t *preperiod);

/**
 * Length of the periodic part. `CapExceeded` when no period was found.
 */
enum CfStatus cubefarey_orbit_period(const struct CfOrbit *orbit, size_t *period);

/**
 * Whether the dominant eigenvalue of the period matrix is a Pisot number;
 * writes 1 or 0. `CapExceeded` when no period was found.
 */
enum CfStatus cubefarey_orbit_is_pisot(const struct CfOrbit *orbit, int *pisot);

/**
 * Characteristic polynomial of the period matrix as the string "c0;c1;c2"
 * (x^3 + c2 x^2 + c1 x + c0). The string is allocated by this library and
 * must be released with [`cubefarey_string_free`]. `CapExceeded` when no
 * period was found.
 */
enum CfStatus cubefarey_orbit_charpoly(const struct CfOrbit *orbit, char **charpoly);

/**
 * Decides whether the monic cubic with coefficients "c0,c1,c2" (integers,
 * meaning x^3 + c2 x^2 + c1 x + c0) is the minimal polynomial of a Pisot
 * number; writes 1 or 0. Reducible polynomials get 0.
 */
enum CfStatus cubefarey_pisot(const char *poly, int *pisot);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void cubefarey_string_free(char *s);

/**
 * Releases an orbit handle. Null is a no-op.
 */
void cubefarey_orbit_free(struct CfOrbit *orbit);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBEFAREY_H */
