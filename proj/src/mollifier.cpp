#include "mollifier.hpp"

#include <cmath>

#include "errors.hpp"
#include "euler_products.hpp"
#include "pair_sums.hpp"

namespace zr {

mollifier_coeffs make_mollifier_coeffs(double a, uint64_t X, const prime_table& table) {
  if (!(a > 0)) throw domain_error("a must be positive");
  if (X < 1) throw usage_error("X must be at least 1");
  if (X > table.limit) throw usage_error("X exceeds the prime table limit");
  mollifier_coeffs out;
  out.a = a;
  out.b = 1 - a / 2;
  out.X = X;
  for (uint64_t n = 1; n <= X; ++n) {
    const int mu = table.mu(n);
    if (mu == 0) continue;
    out.entries.emplace_back(n, mu * std::exp(-out.b * std::log(static_cast<double>(n))));
  }
  return out;
}

mollified_prediction bchb_main_term(double T, const mollifier_coeffs& coeffs,
                                    const prime_table& table, const precision_ctx& ctx) {
  if (!(T >= 100)) throw domain_error("T must be at least 100");
  const pair_sum_result plain = pair_sum(coeffs.a, coeffs.X, pair_variant::plain, table, ctx);
  const pair_sum_result logr = pair_sum(coeffs.a, coeffs.X, pair_variant::log_ratio, table, ctx);
  const qreal Tq = qreal(T);
  const qreal lnT = q_log(Tq);
  const qreal gamma = euler_gamma_q();

  mollified_prediction out;
  out.T = T;
  out.a = coeffs.a;
  out.X = coeffs.X;
  out.s1 = to_d(Tq * lnT * plain.value_q);
  out.s2 = to_d(Tq * (-log_2pi_q() + 2 * gamma - 1) * plain.value_q);
  out.s3 = to_d(Tq * logr.value_q);
  out.total = out.s1 + out.s2 + out.s3;
  out.gamma_used = to_d(gamma);
  return out;
}

double theorem_prediction(double T, double a, uint64_t P, const prime_table& table,
                          const precision_ctx& ctx) {
  if (!(T >= 100)) throw domain_error("T must be at least 100");
  const euler_value v1 = d1(a, P, table, ctx);
  const euler_value v0 = d0(a, P, table, ctx);
  return v1.value * T * std::log(T) + v0.value * T;
}

}  // namespace zr
