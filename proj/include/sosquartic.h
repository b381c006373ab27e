/*
 * sosquartic: exact membership tests for the cones of nonnegative and
 * sum-of-squares quartics a*p2^2 + b*p4 on the zero-sum hyperplane of R^{n+1}.
 *
 * All rationals cross this boundary as decimal strings "p" or "p/q". Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with sq_string_free. Handles are released with their *_free
 * function; passing NULL to any *_free function is a no-op.
 *
 * On failure every function returns a nonzero sq_status and leaves its
 * out-parameters untouched; sq_last_error_message() then describes the
 * failure for the calling thread.
 */
#ifndef SOSQUARTIC_H
#define SOSQUARTIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SOSQUARTIC_BUILDING)
#    define SQ_API __declspec(dllexport)
#  else
#    define SQ_API __declspec(dllimport)
#  endif
#else
#  define SQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sq_status {
  SQ_OK = 0,
  SQ_ERR_INVALID_ARGUMENT = 1,
  SQ_ERR_PARSE = 2,
  SQ_ERR_UNSUPPORTED_N = 3,
  SQ_ERR_OUT_OF_RANGE = 4,
  SQ_ERR_NOT_IN_SOS_CONE = 5,
  SQ_ERR_NOT_GLOBALLY_PSD = 6,
  SQ_ERR_DIMENSION_MISMATCH = 7,
  SQ_ERR_NOT_SYMMETRIC = 8,
  SQ_ERR_NOT_HOMOGENEOUS_QUARTIC = 9,
  SQ_ERR_DEGENERATE_BASIS = 10,
  SQ_ERR_TOO_MANY_VARIABLES = 11,
  SQ_ERR_INTERNAL = 99
} sq_status;

typedef enum sq_position {
  SQ_OUTSIDE = 0,
  SQ_BOUNDARY = 1,
  SQ_INTERIOR = 2
} sq_position;

typedef enum sq_quantity {
  SQ_ALPHA = 0,
  SQ_BETA,
  SQ_F_A,
  SQ_F_B,
  SQ_G_A,
  SQ_G_B,
  SQ_S1_A,
  SQ_S1_B,
  SQ_S2_A,
  SQ_S2_B
} sq_quantity;

typedef struct sq_membership sq_membership;
typedef struct sq_certificate sq_certificate;
typedef struct sq_sample_report sq_sample_report;

SQ_API const char* sq_version(void);
SQ_API const char* sq_status_name(sq_status status);
SQ_API const char* sq_position_name(sq_position position);
/* Message of the last failed call on this thread; "" if none. */
SQ_API const char* sq_last_error_message(void);
SQ_API void sq_string_free(char* s);
/* Parses "p" or "p/q" and returns it in lowest terms. */
SQ_API sq_status sq_rational_canonical(const char* text, char** out);

/* ---- classification ---------------------------------------------------- */

SQ_API sq_status sq_classify(int n, const char* a, const char* b, sq_membership** out);
SQ_API void sq_membership_free(sq_membership* m);
SQ_API sq_position sq_membership_psd(const sq_membership* m);
SQ_API sq_position sq_membership_sos(const sq_membership* m);
/* Two-value witness (present iff psd is SQ_OUTSIDE): size 0 and NULL when
 * absent. The pointer stays valid for the lifetime of the handle. */
SQ_API size_t sq_membership_witness_size(const sq_membership* m);
SQ_API const int64_t* sq_membership_witness(const sq_membership* m);
SQ_API int sq_membership_witness_l(const sq_membership* m);
SQ_API int sq_membership_has_sos_coords(const sq_membership* m);
/* Coordinates (a', b') on the SOS generators. With raw != 0 the unique
 * solution is returned even when it is infeasible; otherwise the call fails
 * with SQ_ERR_NOT_IN_SOS_CONE when the form is not SOS. */
SQ_API sq_status sq_membership_sos_coords(const sq_membership* m, int raw, char** s1, char** s2);

SQ_API sq_status sq_global_psd(int n, const char* a, const char* b, int* out);

/* ---- extremal data ----------------------------------------------------- */

SQ_API sq_status sq_extremal_quantity(int n, sq_quantity q, char** out);
SQ_API sq_status sq_phi(int n, int l, char** out);
SQ_API sq_status sq_cones_equal(int n, int* out);
/* *present is set to 0 (and a, b untouched) when the cones coincide. */
SQ_API sq_status sq_gap_witness(int n, int* present, char** a, char** b);

/* ---- certificates ------------------------------------------------------ */

/* SOS certificate modulo p1 for a form in the SOS cone. */
SQ_API sq_status sq_certify(int n, const char* a, const char* b, sq_certificate** out);
/* Certificate in R[x] for a globally nonnegative form. */
SQ_API sq_status sq_certify_global(int n, const char* a, const char* b, sq_certificate** out);
SQ_API sq_status sq_certificate_parse(const char* text, size_t length, sq_certificate** out);
SQ_API sq_status sq_certificate_serialize(const sq_certificate* c, char** out);
/* 1 if the certificate verifies exactly, 0 otherwise (including NULL). */
SQ_API int sq_certificate_verify(const sq_certificate* c);
SQ_API int sq_certificate_n(const sq_certificate* c);
SQ_API size_t sq_certificate_square_count(const sq_certificate* c);
SQ_API int sq_certificate_modulo_p1(const sq_certificate* c);
SQ_API void sq_certificate_free(sq_certificate* c);

/* ---- numeric corroboration --------------------------------------------- */

/* threads == 0 uses the hardware concurrency; the result does not depend on
 * the thread count. */
SQ_API sq_status sq_sample_min(int n, const char* a, const char* b, uint64_t samples,
                               uint64_t seed, unsigned threads, sq_sample_report** out);
SQ_API double sq_sample_report_min(const sq_sample_report* r);
SQ_API size_t sq_sample_report_dim(const sq_sample_report* r);
SQ_API const double* sq_sample_report_point(const sq_sample_report* r);
SQ_API uint64_t sq_sample_report_samples(const sq_sample_report* r);
SQ_API uint64_t sq_sample_report_seed(const sq_sample_report* r);
SQ_API void sq_sample_report_free(sq_sample_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SOSQUARTIC_H */
