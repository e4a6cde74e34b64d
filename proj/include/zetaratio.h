/*
 * zetaratio: mean values of ratios of the Riemann zeta function.
 *
 * C interface to the library core. All functions return zr_status; outputs
 * go through pointers. On failure, zr_last_error() describes the problem
 * (thread-local), and for ZR_ACCURACY zr_last_error_estimate() reports the
 * error estimate that was achieved.
 */

#ifndef ZETARATIO_H
#define ZETARATIO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zr_status {
  ZR_OK = 0,
  ZR_USAGE = 1,    /* malformed request (bad grid, cutoff above table, ...) */
  ZR_DOMAIN = 2,   /* argument outside the mathematical domain */
  ZR_ACCURACY = 3, /* result could not be certified to the target accuracy */
  ZR_POLE = 4,     /* evaluation at a pole */
  ZR_RESOURCE = 5, /* allocation or size limits */
  ZR_INTERNAL = 6
} zr_status;

const char* zr_last_error(void);
double zr_last_error_estimate(void);
const char* zr_version(void);

/* ---- prime / Mobius tables -------------------------------------------- */

typedef struct zr_table zr_table;

zr_status zr_table_create(uint64_t limit, zr_table** out);
void zr_table_destroy(zr_table* table);
uint64_t zr_table_limit(const zr_table* table);
/* mu(n); returns -2 if n is 0 or above the table limit */
int zr_table_mobius(const zr_table* table, uint64_t n);
zr_status zr_squarefree_count(const zr_table* table, uint64_t X, uint64_t* out);
/* a*log(gcd(m,n)) and a*log(lcm(m,n)) for squarefree m, n */
zr_status zr_log_gcd_lcm_pow(const zr_table* table, uint64_t m, uint64_t n, double a,
                             double* log_gcd_pow, double* log_lcm_pow);

/* ---- precision context ------------------------------------------------- */

typedef struct zr_ctx zr_ctx;

zr_status zr_ctx_create(int digits, zr_ctx** out); /* 15 <= digits <= 32 */
void zr_ctx_destroy(zr_ctx* ctx);
zr_status zr_constants(const zr_ctx* ctx, double* pi_out, double* euler_gamma_out,
                       double* log_2pi_out);

/* ---- zeta kernel -------------------------------------------------------- */

typedef struct zr_complex {
  double re, im;
} zr_complex;

enum { ZR_KERNEL_EULER_MACLAURIN = 0, ZR_KERNEL_RIEMANN_SIEGEL = 1 };

typedef struct zr_zeta_cfg {
  int method;   /* ZR_KERNEL_* */
  int em_terms; /* Euler-Maclaurin series length; 0 = automatic */
  int em_order; /* Bernoulli correction terms; 0 = automatic */
} zr_zeta_cfg;

/* cfg may be NULL for the automatic Euler-Maclaurin path */
zr_status zr_zeta(const zr_ctx* ctx, zr_complex s, const zr_zeta_cfg* cfg, zr_complex* out,
                  double* err_out);
zr_status zr_zeta_deriv_real(const zr_ctx* ctx, double sigma, double* out);
/* sum_{n<=X} mu(n) n^{-1-iat} */
zr_status zr_inv_zeta_poly(const zr_ctx* ctx, const zr_table* table, double t, double a,
                           uint64_t X, zr_complex* out);
/* |1/zeta(1+iat) - inv_zeta_poly(t,a,X)| */
zr_status zr_approx_error(const zr_ctx* ctx, const zr_table* table, double t, double a,
                          uint64_t X, double* out);

/* ---- Euler-product constants ------------------------------------------- */

enum { ZR_KIND_D1 = 0, ZR_KIND_D0TILDE = 1, ZR_KIND_D0 = 2 };

typedef struct zr_euler_value {
  double value;
  double tail_bound;
  uint64_t prime_cutoff;
  double a;
  int kind; /* ZR_KIND_* */
} zr_euler_value;

zr_status zr_d1(const zr_ctx* ctx, const zr_table* table, double a, uint64_t P,
                zr_euler_value* out);
zr_status zr_d0_tilde(const zr_ctx* ctx, const zr_table* table, double a, uint64_t P,
                      zr_euler_value* out);
zr_status zr_d0(const zr_ctx* ctx, const zr_table* table, double a, uint64_t P,
                zr_euler_value* out);

/* ---- square-free pair sums ---------------------------------------------- */

enum { ZR_PAIR_PLAIN = 0, ZR_PAIR_LOG_RATIO = 1 };

typedef struct zr_pair_sum {
  double value;
  uint64_t X;
  double a;
  double b; /* 1 - a/2 */
  int variant;
} zr_pair_sum;

zr_status zr_pair_sum_eval(const zr_ctx* ctx, const zr_table* table, double a, uint64_t X,
                           int variant, zr_pair_sum* out);

typedef struct zr_tail_fit {
  double slope;
  double slope_se;
  double intercept;
  double inflation; /* reference-error estimate added to each residual */
  double x_bar, sxx, s2;
  int n_points;
} zr_tail_fit;

/* residuals_out, if non-NULL, receives n_grid values */
zr_status zr_tail_fit_eval(const zr_ctx* ctx, const zr_table* table, double a, int variant,
                           const uint64_t* grid, size_t n_grid, uint64_t reference_X,
                           double* residuals_out, zr_tail_fit* out);
/* upper (2 sigma prediction band) extrapolation of the fitted residual at X */
zr_status zr_tail_estimate(const zr_tail_fit* fit, double X, double* out);

/* ---- mollified main term ------------------------------------------------ */

/* mu(n) n^{-(1-a/2)} if n is squarefree and n <= X, else 0 */
zr_status zr_mollifier_coeff(const zr_table* table, double a, uint64_t X, uint64_t n,
                             double* out);

typedef struct zr_mollified {
  double T;
  double a;
  uint64_t X;
  double s1, s2, s3;
  double total;
  double gamma_used;
} zr_mollified;

zr_status zr_bchb_main_term(const zr_ctx* ctx, const zr_table* table, double T, double a,
                            uint64_t X, zr_mollified* out);
/* D1(a) T log T + D0(a) T */
zr_status zr_theorem_prediction(const zr_ctx* ctx, const zr_table* table, double T, double a,
                                uint64_t P, double* out);

/* ---- moment quadrature --------------------------------------------------- */

typedef struct zr_quad_cfg {
  double panel_c; /* base panel width = c * 2pi / log(T/2pi) */
  int order;      /* Gauss-Legendre order, 4..64 */
  double rtol;
  int max_depth;
  zr_zeta_cfg kernel;
} zr_quad_cfg;

void zr_quad_cfg_default(zr_quad_cfg* out);

typedef struct zr_moment {
  double t_lo, t_hi;
  double a;
  int has_a;
  double value;
  int64_t nodes_used;
  double err_est;
} zr_moment;

zr_status zr_integrate_ratio_moment(const zr_ctx* ctx, double T, double a,
                                    const zr_quad_cfg* cfg, zr_moment* out);
zr_status zr_integrate_hl_baseline(const zr_ctx* ctx, double T, const zr_quad_cfg* cfg,
                                   zr_moment* out);

typedef struct zr_scan_row {
  double T;
  double lhs;
  double prediction;
  double rel_dev; /* (lhs - prediction) / (T log T) */
  int64_t nodes_used;
  double err_est;
} zr_scan_row;

/* rows_out must hold n_grid entries */
zr_status zr_error_term_scan(const zr_ctx* ctx, const zr_table* table, const double* T_grid,
                             size_t n_grid, double a, const zr_quad_cfg* cfg, uint64_t P,
                             zr_scan_row* rows_out);

#ifdef __cplusplus
}
#endif

#endif /* ZETARATIO_H */
