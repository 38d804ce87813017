#ifndef FREEPLATE_H
#define FREEPLATE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FP_BUILDING_LIBRARY)
#define FP_API __declspec(dllexport)
#else
#define FP_API __declspec(dllimport)
#endif
#else
#define FP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_status {
  FP_OK = 0,
  FP_ERR_INVALID_ARGUMENT = 1,
  FP_ERR_DOMAIN = 2,
  FP_ERR_CONVERGENCE = 3,
  FP_ERR_NO_ROOT = 4,
  FP_ERR_BOUND_VIOLATION = 5,
  FP_ERR_IO = 6,
  FP_ERR_PARSE = 7,
  FP_ERR_INTERNAL = 8
} fp_status;

typedef enum fp_format { FP_FORMAT_CSV = 0, FP_FORMAT_JSON = 1 } fp_format;

typedef enum fp_check_status { FP_CHECK_PASS = 0, FP_CHECK_FAIL = 1, FP_CHECK_INCONCLUSIVE = 2 } fp_check_status;

#define FP_MAX_DIM 16

typedef struct fp_table fp_table;
typedef struct fp_report fp_report;
typedef struct fp_domain fp_domain;

FP_API const char* fp_version(void);
FP_API const char* fp_status_name(fp_status s);
/* message of the last failed call on this thread; empty after a successful call */
FP_API const char* fp_last_error_message(void);

/* ultraspherical Bessel functions j_l, i_l in dimension d and their derivatives, order <= 4 */
FP_API fp_status fp_bessel_j(int d, int l, int deriv, double z, double* out);
FP_API fp_status fp_bessel_i(int d, int l, int deriv, double z, double* out);
FP_API fp_status fp_bessel_first_deriv_zero(int d, int l, double* out);
/* columns z,j,i for the given derivative order */
FP_API fp_status fp_bessel_table(int d, int l, int deriv, const double* z, size_t n, fp_table** out);
/* columns d,l,zero */
FP_API fp_status fp_bessel_zero_table(int d, int l, fp_table** out);

typedef struct fp_ball_tone {
  int d;
  int l;
  double tau;
  double radius;
  double a;
  double b;
  double omega;
  double gamma;
} fp_ball_tone;

FP_API fp_status fp_ball_determinant(int d, int l, double tau, double a, double* out);
FP_API fp_status fp_ball_fundamental_tone(int d, double tau, fp_ball_tone* out);
/* found is set to 0 when order l has no root below the scan cap */
FP_API fp_status fp_ball_tone_for_order(int d, int l, double tau, fp_ball_tone* out, int* found);
FP_API fp_status fp_ball_scaled_tone(int d, double tau, double radius, double* omega);
/* FP_ERR_NO_ROOT when order l has no root below the scan cap */
FP_API fp_status fp_ball_tone_table(int d, int l, double tau, fp_table** out);
/* n_errors receives the number of grid points without a tone (omitted from the table) */
FP_API fp_status fp_ball_curve(int d, double tau_min, double tau_max, int steps, fp_table** out, int* n_errors);

FP_API fp_status fp_rod_modes(double tau, int modes, fp_table** out);
FP_API fp_status fp_rod_branch_curves(double tau_min, double tau_max, int steps, int modes, fp_table** out,
                                      int* n_errors);
FP_API fp_status fp_rod_degenerate_point(double* a, double* tau, double* omega, double* c_over_d);

FP_API fp_status fp_domain_parse(const char* text, fp_domain** out);
FP_API fp_status fp_domain_dim(const fp_domain* dom, int* d);
FP_API void fp_domain_free(fp_domain* dom);

typedef struct fp_iso_result {
  int d;
  double qhat;
  double tone_ball;
  double gap;
  double mc_error;
  double center_residual;
  double center[FP_MAX_DIM];
} fp_iso_result;

FP_API fp_status fp_iso_quotient(const fp_domain* dom, double tau, uint64_t seed, fp_iso_result* out);
FP_API fp_status fp_iso_domain_report(const fp_domain* dom, double tau, uint64_t seed, fp_report** out);
FP_API fp_status fp_iso_monotonicity_report(int d, double tau, fp_report** out);
FP_API fp_status fp_iso_polynomial_report(fp_report** out);
FP_API fp_status fp_iso_calculus_report(uint64_t seed, fp_report** out);

/* selection: "all" or a module name */
FP_API fp_status fp_verify(const char* selection, uint64_t seed, fp_report** out);
FP_API size_t fp_verify_module_count(void);
FP_API const char* fp_verify_module_name(size_t i);

typedef struct fp_report_entry {
  const char* check;
  const char* ref; /* NULL for plain check reports */
  fp_check_status status;
  double value;
  double tolerance;
  double runtime_ms;
} fp_report_entry;

FP_API int fp_report_passed(const fp_report* r);
FP_API size_t fp_report_size(const fp_report* r);
FP_API fp_status fp_report_entry_at(const fp_report* r, size_t i, fp_report_entry* out);
/* path "-" writes to stdout; files are replaced atomically */
FP_API fp_status fp_report_write(const fp_report* r, const char* path, fp_format fmt, int include_timings);
FP_API void fp_report_free(fp_report* r);

FP_API size_t fp_table_rows(const fp_table* t);
FP_API size_t fp_table_cols(const fp_table* t);
FP_API fp_status fp_table_write(const fp_table* t, const char* path, fp_format fmt);
FP_API void fp_table_free(fp_table* t);

#ifdef __cplusplus
}
#endif

#endif
