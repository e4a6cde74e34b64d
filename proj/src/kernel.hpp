#pragma once

// Unified zeta evaluation front end plus the truncated Mobius Dirichlet
// polynomial and its approximation error against 1/zeta(1 + iat).

#include <complex>

#include "precision.hpp"
#include "prime_table.hpp"
#include "qcomplex.hpp"
#include "zeta.hpp"

namespace zr {

enum class zeta_method { euler_maclaurin, riemann_siegel };

struct zeta_eval_config {
  zeta_method method = zeta_method::euler_maclaurin;
  int em_terms = 0;  // series length N; 0 = choose automatically
  int em_order = 0;  // Bernoulli correction terms; 0 = choose automatically
};

struct kernel_value {
  qcomplex value;
  double err_bound;
  int terms;
};

// zeta(s). Euler-Maclaurin meets ctx.tol; the Riemann-Siegel method is
// accepted only on the critical line with |Im s| >= 10 and carries an
// absolute error bound of 1e-8 up to |Im s| = 1e6.
kernel_value zeta_eval(qcomplex s, const zeta_eval_config& cfg, const precision_ctx& ctx);

// zeta'(sigma) for real sigma > 1.
qreal zeta_deriv_real(qreal sigma, const precision_ctx& ctx);

// sum_{n<=X} mu(n) n^{-1-iat}, the Dirichlet-polynomial approximation to
// 1/zeta(1+iat), evaluated with extended-precision phases.
qcomplex inv_zeta_poly(double t, double a, uint64_t X, const prime_table& table,
                       const precision_ctx& ctx);

// |1/zeta(1+iat) - inv_zeta_poly(t, a, X)|; at = 0 uses 1/zeta(1) = 0.
double approx_error(double t, double a, uint64_t X, const prime_table& table,
                    const precision_ctx& ctx);

// Double-precision 1/zeta(1+it) for bulk scans.
std::complex<double> inv_zeta1_fast(double t, double tol_abs = 1e-9);

// X = exp((log T)^beta), the cutoff rule the polynomial is meant to follow.
double x_from_beta(double T, double beta);

}  // namespace zr
