#ifndef GRADLIE_H
#define GRADLIE_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum GradlieStatus {
  GRADLIE_STATUS_OK = 0,
  GRADLIE_STATUS_NULL_POINTER = 1,
  GRADLIE_STATUS_INVALID_UTF8 = 2,
  GRADLIE_STATUS_INVALID_INPUT = 3,
  GRADLIE_STATUS_INVALID_ALGEBRA = 4,
  GRADLIE_STATUS_BUFFER_TOO_SMALL = 5,
  GRADLIE_STATUS_INTERNAL = 6,
} GradlieStatus;

/**
 * Opaque handle to a graded Lie algebra.
 */
typedef struct GradlieAlgebra GradlieAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null.
 */
const char *gradlie_last_error(void);

/**
 * Static version string.
 */
const char *gradlie_version(void);

/**
 * Builds a named family (`g2`, `sp6`, `sp21`, `so-split`, …). `n` is the
 * so-family parameter, 0 when not needed.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` writable.
 */
enum GradlieStatus gradlie_algebra_build(const char *name, size_t n, struct GradlieAlgebra **out);

/**
 * Parses algebra JSON.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum GradlieStatus gradlie_algebra_from_json(const char *json, struct GradlieAlgebra **out);

/**
 * Serializes an algebra; free the result with `gradlie_string_free`.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum GradlieStatus gradlie_algebra_to_json(const struct GradlieAlgebra *a, char **out);

/**
 * # Safety
 * `a` must be null or a handle not yet freed.
 */
void gradlie_algebra_free(struct GradlieAlgebra *a);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void gradlie_string_free(char *s);

/**
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum GradlieStatus gradlie_algebra_dim(const struct GradlieAlgebra *a, size_t *out);

/**
 * Writes `dim g_{-k}, …, dim g_k` into `buf`. `needed` receives `2k+1`;
 * when `len` is smaller nothing is written and `BufferTooSmall` returned.
 *
 * # Safety
 * `buf` must hold `len` values and `needed` be writable.
 */
enum GradlieStatus gradlie_algebra_component_dims(const struct GradlieAlgebra *a,
                                                  size_t *buf,
                                                  size_t len,
                                                  size_t *needed);

/**
 * Runs the structural validator.
 *
 * # Safety
 * `a` must be a live handle and `passed` writable.
 */
enum GradlieStatus gradlie_algebra_validate(const struct GradlieAlgebra *a, bool *passed);

/**
 * Total `dim H^q(g₋, g)`.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum GradlieStatus gradlie_cohomology_dim(const struct GradlieAlgebra *a, size_t q, size_t *out);

/**
 * Whether `H¹(g₋, g)` lives in negative homogeneity only.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum GradlieStatus gradlie_h1_negative(const struct GradlieAlgebra *a, bool *out);

/**
 * Prolongation of `(g₋, der₀)`: its total dimension and whether it
 * matches `g` degree by degree.
 *
 * # Safety
 * `a` must be a live handle; `total` and `matches` writable.
 */
enum GradlieStatus gradlie_prolongation(const struct GradlieAlgebra *a,
                                        size_t *total,
                                        bool *matches);

/**
 * Seeded gap scan; `violations` counts proper graded subalgebras found
 * with dimension strictly between `lo` and `hi`.
 *
 * # Safety
 * `a` must be a live handle and `violations` writable.
 */
enum GradlieStatus gradlie_gap_scan(const struct GradlieAlgebra *a,
                                    size_t lo,
                                    size_t hi,
                                    size_t trials,
                                    uint64_t seed,
                                    size_t *violations);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRADLIE_H */
