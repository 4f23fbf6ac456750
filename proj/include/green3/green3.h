#ifndef GREEN3_GREEN3_H
#define GREEN3_GREEN3_H

/* C interface to the green3 library: special functions, boundary integral
 * operators on closed curves and the verification runs. Every call returns a
 * green3_status; on failure green3_last_error() holds a message for the
 * calling thread. Strings returned through char** are released with
 * green3_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GREEN3_BUILDING_LIBRARY)
#    define GREEN3_API __declspec(dllexport)
#  else
#    define GREEN3_API __declspec(dllimport)
#  endif
#else
#  define GREEN3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum green3_status {
    GREEN3_OK = 0,
    GREEN3_INVALID_ARGUMENT = 1,
    GREEN3_CONFIGURATION = 2,
    GREEN3_SINGULARITY = 3,
    GREEN3_RANGE = 4,
    GREEN3_ACCURACY_REGIME = 5,
    GREEN3_RESONANCE = 6,
    GREEN3_PRECONDITION = 7,
    GREEN3_EVALUATION = 8,
    GREEN3_TRUNCATION = 9,
    GREEN3_UNSUPPORTED = 10,
    GREEN3_IO = 11,
    GREEN3_INTERNAL = 99
} green3_status;

typedef enum green3_operator_kind {
    GREEN3_OP_SINGLE_LAYER = 0,   /* S */
    GREEN3_OP_DOUBLE_LAYER = 1,   /* K */
    GREEN3_OP_ADJOINT_DOUBLE = 2, /* K* */
    GREEN3_OP_DTN_INTERIOR = 3,   /* M+ */
    GREEN3_OP_DTN_EXTERIOR = 4    /* M- */
} green3_operator_kind;

typedef struct green3_curve green3_curve;
typedef struct green3_operator green3_operator;
typedef struct green3_report green3_report;

GREEN3_API const char* green3_version(void);
GREEN3_API const char* green3_status_string(green3_status status);
/* Message of the last failed call on this thread; "" if none. */
GREEN3_API const char* green3_last_error(void);
GREEN3_API void green3_string_free(char* s);

/* Bessel J_n(w) and Hankel H^(1)_n(w), w = re + i im. */
GREEN3_API green3_status green3_bessel_j(int order, double re, double im, double* out_re, double* out_im);
GREEN3_API green3_status green3_hankel1(int order, double re, double im, double* out_re, double* out_im);
/* Fundamental solution of -Delta - z in dimension 2 or 3 at distance r > 0. */
GREEN3_API green3_status green3_fundamental_solution(int dim, double z_re, double z_im, double r, double* out_re,
                                                     double* out_im);

/* Curve "disk", "ellipse:A,B" or "kite" with n trapezoidal nodes (n even, >= 8). */
GREEN3_API green3_status green3_curve_create(const char* spec, int nodes, green3_curve** out);
GREEN3_API void green3_curve_destroy(green3_curve* curve);
GREEN3_API green3_status green3_curve_size(const green3_curve* curve, int* nodes);
/* Node j: position, outward unit normal and arc-length weight. */
GREEN3_API green3_status green3_curve_node(const green3_curve* curve, int j, double position[2], double normal[2],
                                           double* weight);

/* Dense Nystrom operator on the nodes of curve at spectral parameter z. */
GREEN3_API green3_status green3_operator_assemble(const green3_curve* curve, green3_operator_kind kind, double z_re,
                                                  double z_im, green3_operator** out);
GREEN3_API void green3_operator_destroy(green3_operator* op);
GREEN3_API green3_status green3_operator_size(const green3_operator* op, int* n);
/* in and out hold n complex values as interleaved (re, im) pairs. */
GREEN3_API green3_status green3_operator_apply(const green3_operator* op, const double* in, double* out);

/* Normalized serialization of a run configuration (JSON text). */
GREEN3_API green3_status green3_config_normalize(const char* config_json, char** out);
/* Runs the checks named by the configuration. A configuration error returns
 * GREEN3_CONFIGURATION and no report; failed checks still return GREEN3_OK
 * with green3_report_passed() == 0. */
GREEN3_API green3_status green3_run(const char* config_json, green3_report** out);
GREEN3_API int green3_report_passed(const green3_report* report);
/* The report rendered in the format and timing mode of its configuration. */
GREEN3_API green3_status green3_report_render(const green3_report* report, char** out);
GREEN3_API green3_status green3_report_json(const green3_report* report, int include_timing, char** out);
GREEN3_API green3_status green3_report_csv(const green3_report* report, int include_timing, char** out);
GREEN3_API void green3_report_destroy(green3_report* report);

#ifdef __cplusplus
}
#endif

#endif
