/* C interface to the schurlab verification library. */

#ifndef SCHURLAB_H
#define SCHURLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call: OK and MISMATCH both carry a fully computed
 * report; the remaining values mean no result was produced.
 */
typedef enum SlStatus {
  /**
   * Computation succeeded and the mathematical check (if any) passed.
   */
  SL_STATUS_OK = 0,
  /**
   * Computation succeeded but found a mismatch or positivity violation.
   */
  SL_STATUS_MISMATCH = 1,
  /**
   * Malformed or out-of-range input; nothing was computed.
   */
  SL_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The supplied derivative profile is too short to decide.
   */
  SL_STATUS_UNDECIDABLE = 3,
  /**
   * An internal panic was caught at the boundary.
   */
  SL_STATUS_PANIC = 4,
} SlStatus;

/**
 * Opaque positivity-scan report.
 */
typedef struct SlPreserveReport SlPreserveReport;

/**
 * Opaque identity-verification report.
 */
typedef struct SlVerifyReport SlVerifyReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or null.
 * The pointer stays valid until the next failing call on the thread.
 *
 * # Safety
 * The returned pointer must not be freed or used after a later call.
 */
const char *sl_last_error_message(void);

/**
 * Library version as a static string; never freed.
 */
const char *sl_version(void);

/**
 * Free a string returned through a `char **` out-parameter.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library,
 * and must not be used afterwards.
 */
void sl_string_free(char *s);

/**
 * Render the Schur polynomial of the given degree tuple in
 * `len` variables, computing it by both constructions and requiring
 * them to agree.
 *
 * # Safety
 * `parts` must point to `len` readable `uint32_t`s; `out` must be a
 * valid pointer.  The string written to `*out` is freed with
 * [`sl_string_free`].
 */
enum SlStatus sl_schur_render(const uint32_t *parts, size_t len, char **out);

/**
 * Compare the determinant expansion of the geometric-kernel family
 * against its Schur-sum closed form through degree `degree`.
 * `u` and `v` are comma-separated rationals with distinct coordinates.
 *
 * # Safety
 * `u` and `v` must be valid NUL-terminated strings and `out` a valid
 * pointer.  `*out` is freed with [`sl_verify_report_free`].
 */
enum SlStatus sl_verify_cauchy(const char *u,
                               const char *v,
                               size_t degree,
                               struct SlVerifyReport **out);

/**
 * The same comparison for f(x) = (1 - cx)^{-1}, regrouped three ways.
 *
 * # Safety
 * As [`sl_verify_cauchy`]; `c` must also be a valid string.
 */
enum SlStatus sl_verify_frobenius(const char *c,
                                  const char *u,
                                  const char *v,
                                  size_t degree,
                                  struct SlVerifyReport **out);

/**
 * Three-route expansion check for the polynomial with the given
 * comma-separated coefficients.
 *
 * # Safety
 * As [`sl_verify_cauchy`]; `poly` must also be a valid string.
 */
enum SlStatus sl_verify_tsymm(const char *poly,
                              const char *u,
                              const char *v,
                              size_t degree,
                              struct SlVerifyReport **out);

/**
 * Whether every compared coefficient agreed.
 *
 * # Safety
 * `r` must be a live report handle.
 */
bool sl_verify_report_match(const struct SlVerifyReport *r);

/**
 * Degree of the first disagreement, or -1 when everything matched.
 *
 * # Safety
 * `r` must be a live report handle.
 */
int64_t sl_verify_report_first_mismatch(const struct SlVerifyReport *r);

/**
 * The coefficient of t^degree on the determinant side, as a "p/q"
 * string.
 *
 * # Safety
 * `r` must be a live report handle and `out` a valid pointer; the
 * string is freed with [`sl_string_free`].
 */
enum SlStatus sl_verify_report_coeff(const struct SlVerifyReport *r, size_t degree, char **out);

/**
 * The full report as pretty-printed JSON.
 *
 * # Safety
 * `r` must be a live report handle and `out` a valid pointer; the
 * string is freed with [`sl_string_free`].
 */
enum SlStatus sl_verify_report_json(const struct SlVerifyReport *r, char **out);

/**
 * Release a verification report.
 *
 * # Safety
 * `r` must be null or a handle from this library, unused afterwards.
 */
void sl_verify_report_free(struct SlVerifyReport *r);

/**
 * Scan x^alpha over the n-dimensional geometric test family with the
 * given base point and sweep radius.
 *
 * # Safety
 * `a` and `eps` must be valid NUL-terminated strings and `out` a valid
 * pointer.  `*out` is freed with [`sl_preserve_report_free`].
 */
enum SlStatus sl_preserve_power(double alpha,
                                size_t n,
                                const char *a,
                                const char *eps,
                                size_t grid,
                                struct SlPreserveReport **out);

/**
 * Scan the polynomial with the given comma-separated coefficients,
 * exactly, over the same family.
 *
 * # Safety
 * As [`sl_preserve_power`]; `coeffs` must also be a valid string.
 */
enum SlStatus sl_preserve_poly(const char *coeffs,
                               size_t n,
                               const char *a,
                               const char *eps,
                               size_t grid,
                               struct SlPreserveReport **out);

/**
 * Number of grid points whose matrix failed the positivity check.
 *
 * # Safety
 * `r` must be a live report handle.
 */
size_t sl_preserve_report_violation_count(const struct SlPreserveReport *r);

/**
 * Whether the scan found no violation and the derivative conclusion
 * (when decidable) passed.
 *
 * # Safety
 * `r` must be a live report handle.
 */
bool sl_preserve_report_passes(const struct SlPreserveReport *r);

/**
 * The full report as pretty-printed JSON.
 *
 * # Safety
 * `r` must be a live report handle and `out` a valid pointer; the
 * string is freed with [`sl_string_free`].
 */
enum SlStatus sl_preserve_report_json(const struct SlPreserveReport *r, char **out);

/**
 * Release a scan report.
 *
 * # Safety
 * `r` must be null or a handle from this library, unused afterwards.
 */
void sl_preserve_report_free(struct SlPreserveReport *r);

/**
 * Decide whether the strictly increasing `tuple` of derivative orders
 * is admissible for the profile spec (`exp`, `monomial:K`,
 * `two-term:J:K`, `all-zero`, or an explicit derivative list).
 *
 * # Safety
 * `profile` must be a valid NUL-terminated string, `tuple` must point
 * to `tuple_len` readable `size_t`s, and `out_admissible` must be a
 * valid pointer.
 */
enum SlStatus sl_admissible_tuple(const char *profile,
                                  size_t n,
                                  const size_t *tuple,
                                  size_t tuple_len,
                                  bool *out_admissible);

/**
 * The closed-form admissibility classification for the profile:
 * either `ALL_ADMISSIBLE` or the threshold rule, rendered as text.
 *
 * # Safety
 * `profile` must be a valid NUL-terminated string and `out` a valid
 * pointer; the string is freed with [`sl_string_free`].
 */
enum SlStatus sl_admissible_classify(const char *profile, size_t n, char **out);

/**
 * Run the acceptance battery (`scale` is "smoke" or "desk") and hand
 * back the JSON report.  Returns OK when every criterion passed and
 * MISMATCH (with the report still written) otherwise.
 *
 * # Safety
 * `scale` must be a valid NUL-terminated string and `out_json` a valid
 * pointer; the string is freed with [`sl_string_free`].
 */
enum SlStatus sl_suite_run(uint64_t seed, const char *scale, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHURLAB_H */
