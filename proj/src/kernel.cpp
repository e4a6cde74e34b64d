#include "kernel.hpp"

#include <cmath>

#include "errors.hpp"
#include "rs.hpp"

namespace zr {

kernel_value zeta_eval(qcomplex s, const zeta_eval_config& cfg, const precision_ctx& ctx) {
  if (cfg.method == zeta_method::riemann_siegel) {
    if (q_abs(s.re - qreal(0.5Q)) > qreal(1e-30Q) || q_abs(s.im) < 10)
      throw usage_error("riemann-siegel requires Re s = 1/2 and |Im s| >= 10");
    const zeta_value_d v = rs_zeta_half(to_d(s.im));
    return {qc(qreal(v.value.real()), qreal(v.value.imag())), v.err_bound, v.terms};
  }
  const zeta_value_q v = zeta_em_q(s, ctx, cfg.em_terms, cfg.em_order);
  return {v.value, to_d(v.err_bound), v.terms};
}

qreal zeta_deriv_real(qreal sigma, const precision_ctx& ctx) {
  return zeta_deriv_real_q(sigma, ctx);
}

qcomplex inv_zeta_poly(double t, double a, uint64_t X, const prime_table& table,
                       const precision_ctx& ctx) {
  (void)ctx;
  if (!(a > 0)) throw domain_error("a must be positive");
  if (X < 1) throw usage_error("inv_zeta_poly: X must be at least 1");
  if (X > table.limit) throw usage_error("inv_zeta_poly: X exceeds the prime table limit");
  const qreal at = qreal(a) * qreal(t);
  const qreal two_pi = 2 * q_pi();
  qcomplex sum{};
  for (uint64_t n = 1; n <= X; ++n) {
    const int mu = table.mu(n);
    if (mu == 0) continue;
    const qreal ln = q_log(qreal(n));
    qreal phi = -at * ln;
    phi -= q_floor(phi / two_pi + qreal(0.5Q)) * two_pi;
    qreal si, co;
    q_sincos(phi, &si, &co);
    sum += qc(mu * co / qreal(n), mu * si / qreal(n));
  }
  return sum;
}

double approx_error(double t, double a, uint64_t X, const prime_table& table,
                    const precision_ctx& ctx) {
  if (!(a > 0)) throw domain_error("a must be positive");
  const qcomplex poly = inv_zeta_poly(t, a, X, table, ctx);
  if (a * t == 0) return to_d(abs(poly));  // 1/zeta(1) = 0 at the pole
  const zeta_value_q z = zeta_em_q(qc(1, qreal(a) * qreal(t)), ctx);
  return to_d(abs(qc(1) / z.value - poly));
}

std::complex<double> inv_zeta1_fast(double t, double tol_abs) {
  if (t == 0) return {0.0, 0.0};
  return 1.0 / zeta_em_d(std::complex<double>(1.0, t), tol_abs).value;
}

double x_from_beta(double T, double beta) {
  if (!(T > 1)) throw domain_error("x_from_beta: T must exceed 1");
  return std::exp(std::pow(std::log(T), beta));
}

}  // namespace zr
