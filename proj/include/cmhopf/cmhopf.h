/* C interface to the cmhopf library. Every function returns a cmh_status;
 * on failure cmh_last_error() describes the problem. Strings returned through
 * char** are owned by the caller and released with cmh_string_free. */
#ifndef CMHOPF_CMHOPF_H
#define CMHOPF_CMHOPF_H

#include <stddef.h>
#include <stdint.h>

#if defined(CMHOPF_BUILDING_LIBRARY)
#define CMH_API __attribute__((visibility("default")))
#else
#define CMH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cmh_status {
  CMH_OK = 0,
  CMH_ERR_NULL_ARGUMENT = 1,
  CMH_ERR_INVALID_ARGUMENT = 2,
  CMH_ERR_PARSE = 3,
  CMH_ERR_UNSUPPORTED = 4,
  CMH_ERR_OUT_OF_RANGE = 5,
  CMH_ERR_INTERNAL = 6
} cmh_status;

typedef enum cmh_coords {
  CMH_COORDS_DELTA = 0,
  CMH_COORDS_A = 1,
  CMH_COORDS_GAMMA = 2
} cmh_coords;

typedef enum cmh_format {
  CMH_FORMAT_TABLE = 0,
  CMH_FORMAT_JSON = 1,
  CMH_FORMAT_TEXT = 2
} cmh_format;

typedef enum cmh_kind {
  CMH_KIND_ALGEBRA = 0,
  CMH_KIND_TENSOR = 1
} cmh_kind;

/* An algebra or tensor element, possibly carrying its ordered table. */
typedef struct cmh_element cmh_element;
typedef struct cmh_report cmh_report;

typedef struct cmh_verify_options {
  int      degree;
  uint64_t seed;
  int      trials;
  int      inject_fault; /* test hook; nonzero corrupts Delta(delta_2) */
} cmh_verify_options;

CMH_API const char* cmh_last_error(void);
CMH_API void        cmh_string_free(char* s);

/* Coproduct or antipode of generator n in the given coordinates. */
CMH_API cmh_status cmh_coproduct(int n, cmh_coords coords, cmh_element** out);
CMH_API cmh_status cmh_antipode(int n, cmh_coords coords, cmh_element** out);

/* Parses either JSON schema; the result has no table. */
CMH_API cmh_status cmh_element_from_json(const char* json, cmh_element** out);

/* CMH_FORMAT_TABLE needs an element built by cmh_coproduct or
 * cmh_antipode, otherwise CMH_ERR_UNSUPPORTED. */
CMH_API cmh_status cmh_element_render(const cmh_element* e, cmh_format format, char** out);
CMH_API cmh_status cmh_element_kind(const cmh_element* e, cmh_kind* out);
CMH_API cmh_status cmh_element_term_count(const cmh_element* e, size_t* out);

/* Coefficient as "p/q". For algebra elements right/right_len are ignored.
 * Factor arrays list generator indices; order does not matter. */
CMH_API cmh_status cmh_element_coefficient(const cmh_element* e,
                                           const int*         left,
                                           size_t             left_len,
                                           const int*         right,
                                           size_t             right_len,
                                           char**             out);
CMH_API cmh_status cmh_element_equal(const cmh_element* a, const cmh_element* b, int* out);
CMH_API void       cmh_element_free(cmh_element* e);

/* Both coefficient tables and the collected displays for weights up to
 * max_degree. */
CMH_API cmh_status cmh_tables(int max_degree, char** out);

CMH_API cmh_status cmh_verify(const cmh_verify_options* options, cmh_report** out);
CMH_API cmh_status cmh_report_passed(const cmh_report* r, int* out);
CMH_API cmh_status cmh_report_check_count(const cmh_report* r, size_t* out);
/* name and detail stay valid until cmh_report_free. */
CMH_API cmh_status cmh_report_check(const cmh_report* r,
                                    size_t            index,
                                    const char**      name,
                                    int*              passed,
                                    const char**      detail);
CMH_API cmh_status cmh_report_render(const cmh_report* r, char** out);
CMH_API void       cmh_report_free(cmh_report* r);

/* Solves u(x) phi'(x) = phi(x) for u = x + u_1 x^2 + ..., with u given as
 * comma-separated rationals. Writes "φ₁ = ..." lines and a residual line;
 * residual_zero receives 1 when u phi' - phi vanishes to working order. */
CMH_API cmh_status cmh_conjugate(const char* u_csv, int order, char** out, int* residual_zero);

#ifdef __cplusplus
}
#endif

#endif /* CMHOPF_CMHOPF_H */
