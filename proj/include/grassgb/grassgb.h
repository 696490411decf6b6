/* C interface to the grassgb library.
 *
 * Every fallible function returns a ggb_status and writes its result through
 * an out-parameter, which is left untouched on failure. The message of the
 * most recent failure on the calling thread is available from
 * ggb_last_error(). Strings returned through char** are owned by the caller
 * and released with ggb_string_free(); handles are released with the matching
 * *_free function. All free functions accept NULL.
 */
#ifndef GRASSGB_GRASSGB_H
#define GRASSGB_GRASSGB_H

#include <stdint.h>

#if defined(_WIN32)
#  define GGB_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define GGB_API __attribute__((visibility("default")))
#else
#  define GGB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ggb_status {
  GGB_OK = 0,
  GGB_ERR_VERIFICATION = 1, /* a verification check failed */
  GGB_ERR_USAGE = 2,        /* bad argument, parse error, out-of-range parameter */
  GGB_ERR_RESOURCE = 3,     /* reduction or enumeration budget exhausted */
  GGB_ERR_INDETERMINATE = 4,/* the requested Steenrod square is not determined */
  GGB_ERR_INTERNAL = 5      /* broken internal invariant or allocation failure */
} ggb_status;

typedef enum ggb_format { GGB_FORMAT_TEXT = 0, GGB_FORMAT_JSON = 1 } ggb_format;

typedef struct ggb_poly ggb_poly;     /* polynomial, with or without the generator a */
typedef struct ggb_tower ggb_tower;   /* cohomology ring for one tower parameter t */
typedef struct ggb_report ggb_report; /* verification report */

GGB_API const char* ggb_version(void);
GGB_API const char* ggb_last_error(void);
GGB_API const char* ggb_status_name(ggb_status status);
GGB_API void ggb_string_free(char* s);

/* Default reduction-step budget for Groebner computations. */
GGB_API uint64_t ggb_default_budget(void);

/* ---- Polynomials ------------------------------------------------------- */

/* t = 0 parses a polynomial in w2, w3 only; t >= 2 also accepts a, of degree
 * 2^t - 1. */
GGB_API ggb_status ggb_poly_parse(const char* text, unsigned t, ggb_poly** out);
/* g_r = sum over 2b + 3c = r of binom(b + c, b) w2^b w3^c. */
GGB_API ggb_status ggb_poly_g(uint64_t r, ggb_poly** out);
GGB_API ggb_status ggb_poly_format(const ggb_poly* p, char** out);
GGB_API int ggb_poly_is_zero(const ggb_poly* p);
GGB_API void ggb_poly_free(ggb_poly* p);

/* Degree-r part of 1 / (1 + w1 + ... + wk), in canonical text. */
GGB_API ggb_status ggb_wbar(unsigned r, unsigned k, char** out);

/* ---- Cohomology of the tower ------------------------------------------ */

/* budget = 0 selects ggb_default_budget(). */
GGB_API ggb_status ggb_tower_create(unsigned t, uint64_t budget, ggb_tower** out);
GGB_API void ggb_tower_free(ggb_tower* tower);
GGB_API unsigned ggb_tower_t(const ggb_tower* tower);
GGB_API uint64_t ggb_tower_dim(const ggb_tower* tower);

/* f_i = g_{2^t - 3 + 2^i}, 0 <= i <= t - 1. */
GGB_API ggb_status ggb_tower_f(const ggb_tower* tower, unsigned i, ggb_poly** out);
/* The reduced Groebner basis {f_0, ..., f_{t-1}}. */
GGB_API ggb_status ggb_tower_gb(const ggb_tower* tower, ggb_format format, char** out);
/* Additive basis: the slice in one degree, or everything when degree < 0. */
GGB_API ggb_status ggb_tower_basis(const ggb_tower* tower, int64_t degree, ggb_format format,
                                   char** out);
GGB_API ggb_status ggb_tower_betti(const ggb_tower* tower, ggb_format format, char** out);
/* Normal form of x in the cohomology ring; x may omit a (t = 0) or use this t. */
GGB_API ggb_status ggb_tower_normal_form(const ggb_tower* tower, const ggb_poly* x,
                                         ggb_poly** out);
/* Sq^j (j = 1, 2) of the class of x, in normal form. */
GGB_API ggb_status ggb_tower_sq(const ggb_tower* tower, unsigned j, const ggb_poly* x,
                                ggb_poly** out);

/* ---- Verification ------------------------------------------------------ */

/* Independent Buchberger comparison and reducedness checks for this t. */
GGB_API ggb_status ggb_verify_gb(const ggb_tower* tower, ggb_report** out);
/* suite: "all", "gb", "spoly", "bounds", "lemma" or "a2". t_max = 0 runs
 * each suite over its default range; budget = 0 selects the default. A report with failing checks is still returned with GGB_OK. */
GGB_API ggb_status ggb_verify_run(const char* suite, unsigned t_max, uint64_t budget,
                                  ggb_report** out);
GGB_API int ggb_report_passed(const ggb_report* report);
GGB_API ggb_status ggb_report_render(const ggb_report* report, ggb_format format, int with_timing,
                                     char** out);
GGB_API void ggb_report_free(ggb_report* report);

#ifdef __cplusplus
}
#endif

#endif /* GRASSGB_GRASSGB_H */
