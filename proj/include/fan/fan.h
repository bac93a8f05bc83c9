/*
 * C interface to the fan library: coefficient transforms on the unit ball,
 * positivity-cone tests, realization evaluators, restriction-operator
 * spectra, and a symmetrized functional calculus for operator tuples.
 *
 * All objects are opaque handles created from / serialized to the JSON
 * schemas documented next to each constructor. Every function returns a
 * fan_status; on FAN_ERROR* the thread-local message from fan_last_error()
 * describes the failure. Strings returned through char** are owned by the
 * caller and must be released with fan_string_free().
 */

#ifndef FAN_FAN_H
#define FAN_FAN_H

#include <stddef.h>

#ifndef FAN_API
#if defined(_WIN32)
#define FAN_API __declspec(dllexport)
#else
#define FAN_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fan_status {
  FAN_OK = 0,
  FAN_ERROR_INVALID_ARGUMENT = 1, /* bad parameters, schema violations */
  FAN_ERROR_DOMAIN = 2,           /* poles, singular resolvents, undefined forms */
  FAN_ERROR_INTERNAL = 3
} fan_status;

typedef struct fan_series fan_series;
typedef struct fan_measure fan_measure;
typedef struct fan_tuple fan_tuple;
typedef struct fan_realization fan_realization;

FAN_API const char* fan_last_error(void);
FAN_API void fan_string_free(char* s);

/* ---- series: {"dim":2,"max_degree":6,"coeffs":[{"alpha":[1,0],"re":1,"im":0},...]} */
FAN_API fan_status fan_series_from_json(const char* json, fan_series** out);
FAN_API fan_status fan_series_to_json(const fan_series* s, char** json_out);
FAN_API void fan_series_free(fan_series* s);

/* op is one of "F", "L", "E", "lambda", "gamma". */
FAN_API fan_status fan_series_transform(const fan_series* s, const char* op, fan_series** out);
/* z has 2*dim doubles: re0, im0, re1, im1, ... */
FAN_API fan_status fan_series_evaluate(const fan_series* s, const double* z, size_t len,
                               double* re_out, double* im_out);
FAN_API fan_status fan_series_cayley(const fan_series* s, fan_series** out);

/* ---- measures: {"dim":2,"atoms":[{"point":[[re,im],...],"weight":w},...]} */
FAN_API fan_status fan_measure_from_json(const char* json, fan_measure** out);
FAN_API fan_status fan_measure_to_json(const fan_measure* mu, char** json_out);
FAN_API void fan_measure_free(fan_measure* mu);

/* Positive sphere rule with moments exact through the given degree cap. */
FAN_API fan_status fan_sphere_quadrature(int dim, int max_degree, fan_measure** out);

/* Truncated Taylor expansion of the Herglotz transform of mu. */
FAN_API fan_status fan_measure_herglotz_series(const fan_measure* mu, int max_degree, fan_series** out);

/*
 * Cone tests; each writes a JSON report {"verdict":"pass|fail|inconclusive",
 * "min_eigenvalue":..., "worst":...}.
 *  - "schur": Gram PSD test of series f on `points` quasi-random ball points.
 *  - "op":    sampled positive real part of f on `points` ball points.
 *  - "mp":    necessary moment bounds for the Herglotz cone on f.
 * radius bounds the sample radius; tol is the verdict tolerance.
 */
FAN_API fan_status fan_cone_test_series(const char* test, const fan_series* f, int points, double radius,
                                double tol, unsigned long long seed, char** report_out);
/* "kp": annihilation families for measure mu up to degree cap. */
FAN_API fan_status fan_cone_test_measure(const char* test, const fan_measure* mu, int max_degree,
                                 double tol, char** report_out);

/* ---- operator tuples:
 * {"n":2,"d":2,"matrices":[[[[re,im],...d entries...],...d rows...],...]} */
FAN_API fan_status fan_tuple_from_json(const char* json, fan_tuple** out);
FAN_API fan_status fan_tuple_to_json(const fan_tuple* t, char** json_out);
FAN_API void fan_tuple_free(fan_tuple* t);

/* Joint numerical radius bracket (numerical radius when n = 1). */
FAN_API fan_status fan_tuple_numrange(const fan_tuple* t, int effort, unsigned long long seed,
                              double* lower_out, double* upper_out);
FAN_API fan_status fan_tuple_scale_to_ball(const fan_tuple* t, double margin, int effort,
                                   unsigned long long seed, fan_tuple** out);

/*
 * Functional-calculus checks; check is "bound", "eqi8" or "positivity".
 *  - bound: p required; verifies the calculus norm bound for the tuple.
 *  - eqi8: tuple ignored; arg1 = m; uses the standard nilpotent example.
 *  - positivity: p required; sampled hypothesis then matrix positivity.
 * Writes a JSON report with the computed quantities and pass/fail.
 */
FAN_API fan_status fan_funcalc_check(const char* check, const fan_tuple* t, const fan_series* p, int arg1,
                             double tol, unsigned long long seed, char** report_out);

/* ---- realizations */
FAN_API fan_status fan_realization_from_json(const char* json, fan_realization** out);
FAN_API fan_status fan_realization_to_json(const fan_realization* r, char** json_out);
FAN_API void fan_realization_free(fan_realization* r);

FAN_API fan_status fan_realization_eval(const fan_realization* r, const double* z, size_t len,
                                double* re_out, double* im_out);
FAN_API fan_status fan_build_normal_realization(const fan_measure* mu, double t, fan_realization** out);
FAN_API fan_status fan_build_f2_realization(const fan_measure* mu, double t, fan_realization** out);

/* ---- restriction spectra
 * domain is "ball:<r>" or "ellipsoid:<r1>,<r2>[,<r3>]"; writes CSV rows
 * (alpha, lambda closed form, lambda quadrature, relative error). */
FAN_API fan_status fan_spectra_csv(const char* domain, int max_degree, char** csv_out);

/* ---- verification suites (names via fan_suite_names) */
FAN_API fan_status fan_suite_names(char** names_json_out);
/* overrides_json: {"seed":..., "tol":..., ...} or NULL. Writes the JSON
 * report; *pass_out is 1 iff every check passed. */
FAN_API fan_status fan_verify(const char* suite, const char* overrides_json, int* pass_out,
                      char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* FAN_FAN_H */
