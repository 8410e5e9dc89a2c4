#ifndef PHASERET_H
#define PHASERET_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum PhaseretStatus {
  PHASERET_STATUS_OK = 0,
  PHASERET_STATUS_INVALID_ARGUMENT = 1,
  PHASERET_STATUS_DEGENERATE_SIGNAL = 2,
  PHASERET_STATUS_NOT_CIRCLE_EQUAL = 3,
  PHASERET_STATUS_RESOURCE_LIMIT = 4,
  PHASERET_STATUS_IO = 5,
  PHASERET_STATUS_JSON = 6,
  PHASERET_STATUS_NULL_POINTER = 7,
  PHASERET_STATUS_PANIC = 8,
} PhaseretStatus;

typedef enum PhaseretVerdictKind {
  PHASERET_VERDICT_KIND_GLOBAL_PHASE = 0,
  PHASERET_VERDICT_KIND_CONJUGATE_REFLECTION = 1,
  PHASERET_VERDICT_KIND_DISTINCT = 2,
} PhaseretVerdictKind;

typedef enum PhaseretSampleKind {
  PHASERET_SAMPLE_KIND_CONTINUOUS_DERIV = 0,
  PHASERET_SAMPLE_KIND_DISCRETE_DERIV = 1,
} PhaseretSampleKind;

typedef struct PhaseretPoly PhaseretPoly;

typedef struct PhaseretPolyList PhaseretPolyList;

typedef struct PhaseretRecord PhaseretRecord;

typedef struct PhaseretSignal PhaseretSignal;

typedef struct PhaseretComplex {
  double re;
  double im;
} PhaseretComplex;

/**
 * `constant` is meaningful only when `has_constant` is true.
 */
typedef struct PhaseretVerdict {
  enum PhaseretVerdictKind kind;
  bool has_constant;
  struct PhaseretComplex constant;
  double residual;
} PhaseretVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Release with
 * [`phaseret_string_free`].
 */
char *phaseret_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library that was not yet freed.
 */
void phaseret_string_free(char *s);

/**
 * # Safety
 * `values` must point to `n` elements; `out` must be writable.
 */
enum PhaseretStatus phaseret_signal_new(size_t n,
                                        double extent,
                                        const struct PhaseretComplex *values,
                                        struct PhaseretSignal **out);

/**
 * `exp(-pi t^2)` on the grid.
 *
 * # Safety
 * `out` must be writable.
 */
enum PhaseretStatus phaseret_signal_gauss(size_t n, double extent, struct PhaseretSignal **out);

/**
 * Gaussian times a seeded random complex polynomial of degree `1..=max_degree`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PhaseretStatus phaseret_signal_random(size_t n,
                                           double extent,
                                           uint64_t seed,
                                           size_t max_degree,
                                           struct PhaseretSignal **out);

/**
 * # Safety
 * Both outputs must be writable.
 */
enum PhaseretStatus phaseret_bargmann_pair(size_t n,
                                           double extent,
                                           struct PhaseretSignal **out_plus,
                                           struct PhaseretSignal **out_minus);

/**
 * Number of samples, or 0 for NULL.
 *
 * # Safety
 * `sig` must be NULL or a live handle.
 */
size_t phaseret_signal_len(const struct PhaseretSignal *sig);

/**
 * Copies the samples into `buf`, which must hold exactly `len` elements.
 *
 * # Safety
 * `sig` must be a live handle and `buf` must point to `len` writable elements.
 */
enum PhaseretStatus phaseret_signal_values(const struct PhaseretSignal *sig,
                                           struct PhaseretComplex *buf,
                                           size_t len);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum PhaseretStatus phaseret_signal_from_json(const char *json, struct PhaseretSignal **out);

/**
 * # Safety
 * `sig` must be a live handle; `out` must be writable.
 */
enum PhaseretStatus phaseret_signal_to_json(const struct PhaseretSignal *sig, char **out);

/**
 * # Safety
 * `sig` must be NULL or a handle not yet freed.
 */
void phaseret_signal_free(struct PhaseretSignal *sig);

/**
 * Records for the Gaussian, `2 pi t` Gaussian and `(1 - 2 pi t)` Gaussian masks.
 *
 * # Safety
 * `sig` must be a live handle; the three outputs must be writable.
 */
enum PhaseretStatus phaseret_measure_gaussian(const struct PhaseretSignal *sig,
                                              struct PhaseretRecord **out1,
                                              struct PhaseretRecord **out2,
                                              struct PhaseretRecord **out3);

/**
 * Records for the Gaussian and the sine masks with frequencies `a_num/a_den`, `b_num/b_den`.
 *
 * # Safety
 * `sig` must be a live handle; the three outputs must be writable.
 */
enum PhaseretStatus phaseret_measure_sine(const struct PhaseretSignal *sig,
                                          int64_t a_num,
                                          int64_t a_den,
                                          int64_t b_num,
                                          int64_t b_den,
                                          struct PhaseretRecord **out1,
                                          struct PhaseretRecord **out2,
                                          struct PhaseretRecord **out3);

/**
 * # Safety
 * `rec` must be NULL or a live handle.
 */
size_t phaseret_record_len(const struct PhaseretRecord *rec);

/**
 * # Safety
 * `rec` must be a live handle and `buf` must point to `len` writable elements.
 */
enum PhaseretStatus phaseret_record_magnitudes(const struct PhaseretRecord *rec,
                                               double *buf,
                                               size_t len);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum PhaseretStatus phaseret_record_from_json(const char *json, struct PhaseretRecord **out);

/**
 * # Safety
 * `rec` must be a live handle; `out` must be writable.
 */
enum PhaseretStatus phaseret_record_to_json(const struct PhaseretRecord *rec, char **out);

/**
 * # Safety
 * `rec` must be NULL or a handle not yet freed.
 */
void phaseret_record_free(struct PhaseretRecord *rec);

/**
 * Recovers the signal up to a global phase from the three Gaussian records.
 *
 * # Safety
 * The records must be live handles; `out` must be writable.
 */
enum PhaseretStatus phaseret_reconstruct(const struct PhaseretRecord *r1,
                                         const struct PhaseretRecord *r2,
                                         const struct PhaseretRecord *r3,
                                         struct PhaseretSignal **out);

/**
 * # Safety
 * Both signals must be live handles; `out` must be writable.
 */
enum PhaseretStatus phaseret_classify(const struct PhaseretSignal *a,
                                      const struct PhaseretSignal *b,
                                      double tol,
                                      struct PhaseretVerdict *out);

/**
 * # Safety
 * `coeffs` must point to `n` elements; `out` must be writable.
 */
enum PhaseretStatus phaseret_poly_new(const struct PhaseretComplex *coeffs,
                                      size_t n,
                                      struct PhaseretPoly **out);

/**
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t phaseret_poly_len(const struct PhaseretPoly *p);

/**
 * # Safety
 * `p` must be a live handle and `buf` must point to `len` writable elements.
 */
enum PhaseretStatus phaseret_poly_coeffs(const struct PhaseretPoly *p,
                                         struct PhaseretComplex *buf,
                                         size_t len);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum PhaseretStatus phaseret_poly_from_json(const char *json, struct PhaseretPoly **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum PhaseretStatus phaseret_poly_to_json(const struct PhaseretPoly *p, char **out);

/**
 * # Safety
 * `p` must be NULL or a handle not yet freed.
 */
void phaseret_poly_free(struct PhaseretPoly *p);

/**
 * The explicit pair for odd `n >= 3` whose samples agree at `M = 2n - 2` points.
 *
 * # Safety
 * Both outputs must be writable.
 */
enum PhaseretStatus phaseret_counterexample(size_t n,
                                            enum PhaseretSampleKind kind,
                                            struct PhaseretPoly **out_phi,
                                            struct PhaseretPoly **out_psi);

/**
 * # Safety
 * Both polynomials must be live handles; `out` must be writable.
 */
enum PhaseretStatus phaseret_poly_classify(const struct PhaseretPoly *p,
                                           const struct PhaseretPoly *q,
                                           struct PhaseretVerdict *out);

/**
 * Writes `|P(k/m)|` to `modulus` and the derivative quantity of `kind` to
 * `derivative`; both buffers hold `m` values.
 *
 * # Safety
 * `p` must be a live handle and both buffers must point to `m` writable elements.
 */
enum PhaseretStatus phaseret_poly_sample(const struct PhaseretPoly *p,
                                         size_t m,
                                         enum PhaseretSampleKind kind,
                                         double *modulus,
                                         double *derivative);

/**
 * Autocorrelation coefficients from `count = 2N - 1` samples of `|P|`; `out`
 * holds `count` values.
 *
 * # Safety
 * `samples` must point to `count` elements and `out` to `count` writable elements.
 */
enum PhaseretStatus phaseret_interpolate_sq_modulus(const double *samples,
                                                    size_t count,
                                                    struct PhaseretComplex *out);

/**
 * All zero-flip ambiguities of `p` up to global phase, `p` first.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum PhaseretStatus phaseret_enumerate_ambiguities(const struct PhaseretPoly *p,
                                                   struct PhaseretPolyList **out);

/**
 * Members of `list` whose samples at `m` points match those of `reference` within `tol`.
 *
 * # Safety
 * `list` and `reference` must be live handles; `out` must be writable.
 */
enum PhaseretStatus phaseret_poly_list_filter(const struct PhaseretPolyList *list,
                                              size_t m,
                                              enum PhaseretSampleKind kind,
                                              const struct PhaseretPoly *reference,
                                              double tol,
                                              struct PhaseretPolyList **out);

/**
 * # Safety
 * `list` must be NULL or a live handle.
 */
size_t phaseret_poly_list_len(const struct PhaseretPolyList *list);

/**
 * Copy of entry `index` as a new polynomial handle.
 *
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum PhaseretStatus phaseret_poly_list_get(const struct PhaseretPolyList *list,
                                           size_t index,
                                           struct PhaseretPoly **out);

/**
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum PhaseretStatus phaseret_poly_list_to_json(const struct PhaseretPolyList *list, char **out);

/**
 * # Safety
 * `list` must be NULL or a handle not yet freed.
 */
void phaseret_poly_list_free(struct PhaseretPolyList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PHASERET_H */
