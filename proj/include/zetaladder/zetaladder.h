/* C interface to the zetaladder library.
 *
 * Every function returns a zl_status. On failure the message of the most
 * recent error on the calling thread is available from zl_last_error().
 * Sessions are opaque handles that own a J(T) cache; calls on one session
 * are serialized internally.
 */
#ifndef ZETALADDER_H
#define ZETALADDER_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define ZL_API __attribute__((visibility("default")))
#else
#define ZL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zl_status {
  ZL_OK = 0,
  ZL_ERR_DOMAIN = 1,
  ZL_ERR_NON_CONVERGENCE = 2,
  ZL_ERR_CAPABILITY = 3,
  ZL_ERR_LOAD = 4,
  ZL_ERR_BRACKET = 5,
  ZL_ERR_USAGE = 6,
  ZL_ERR_IO = 7,
  ZL_ERR_INVALID_ARGUMENT = 8, /* null pointer or bad enum */
  ZL_ERR_INTERNAL = 9
} zl_status;

typedef enum zl_prime_mode {
  ZL_PRIMES_EXACT = 0,
  ZL_PRIMES_T_OVER_LN_T = 1,
  ZL_PRIMES_LOG_INTEGRAL = 2
} zl_prime_mode;

typedef struct zl_session zl_session;

typedef struct zl_constants {
  double c0;
  double a_exp;
  double delta;
} zl_constants;

typedef struct zl_quadrature {
  double a;
  double b;
  double value;
  double err_estimate;
  int64_t panels;
} zl_quadrature;

typedef struct zl_ladder_point {
  double t;
  double j;
  double phi1;
  double residual;
} zl_ladder_point;

typedef struct zl_law_report {
  char law_id[16];
  double T;
  int k;
  int r;
  double lhs;
  double rhs;
  double abs_residual;
  double rel_residual;
  char notes[128];
} zl_law_report;

typedef struct zl_residual {
  double t;
  double r_t;
  double ratio_quarter;
  double ratio_third;
} zl_residual;

ZL_API const char* zl_version(void);
ZL_API const char* zl_status_string(zl_status status);
/* Message of the last failure on this thread; empty after success. */
ZL_API const char* zl_last_error(void);

/* Defaults: c0 = 0, a_exp = 1/3, delta = 0.05. */
ZL_API zl_constants zl_default_constants(void);

/* -- stateless evaluations ------------------------------------------- */
ZL_API zl_status zl_theta(double t, double* out);
ZL_API zl_status zl_z(double t, double* z, int64_t* terms_used);
ZL_API zl_status zl_abs_zeta_sq(double t, double* out);
ZL_API zl_status zl_spectral_z(double x, double v, double t, double* out);
ZL_API zl_status zl_integrate(double a, double b, double tol, zl_quadrature* out);
ZL_API zl_status zl_prime_pi(double x, zl_prime_mode mode, double* out);
ZL_API zl_status zl_euler_dirichlet(double tol, double* out);

/* -- sessions --------------------------------------------------------- */
/* cache_path may be NULL for an in-memory session. A missing file starts
 * an empty cache. threads >= 1 sets the panel worker count. */
ZL_API zl_status zl_session_open(const char* cache_path, unsigned threads, zl_session** out);
/* Writes the cache back if it changed; no-op for in-memory sessions.
 * zl_session_close does not save. */
ZL_API zl_status zl_session_save(zl_session* s);
ZL_API void zl_session_close(zl_session* s);
/* Panels evaluated since the session was opened. */
ZL_API zl_status zl_session_panels(zl_session* s, int64_t* out);

ZL_API zl_status zl_hl_integral(zl_session* s, double T, double tol, zl_quadrature* out);
ZL_API zl_status zl_phi1(zl_session* s, const zl_constants* k, double t, zl_ladder_point* out);
ZL_API zl_status zl_phi1_inverse(zl_session* s, const zl_constants* k, double t, double* out);
/* points must hold k + 1 values. */
ZL_API zl_status zl_reverse_sequence(zl_session* s, const zl_constants* kc, double t, int k,
                                     double* points);
ZL_API zl_status zl_verify_law(zl_session* s, const zl_constants* kc, const char* law, double T,
                               int k, int r, zl_law_report* out);
ZL_API zl_status zl_hli_residual(zl_session* s, const zl_constants* kc, double T, zl_residual* out);
ZL_API zl_status zl_estimate_euler(zl_session* s, const zl_constants* kc, double T, int r,
                                   double* c_hat);

/* -- command runner --------------------------------------------------- */
/* Runs one command described by a JSON config object (keys: command, T,
 * k, r, law, tol, c0, a_exp, out, cache, from, to, T_start, T_end, points,
 * grid, threads). On success *document receives the CSV or JSON output,
 * to be released with zl_free_string. new_panels may be NULL. */
ZL_API zl_status zl_run(const char* config_json, char** document, int64_t* new_panels);
ZL_API void zl_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ZETALADDER_H */
