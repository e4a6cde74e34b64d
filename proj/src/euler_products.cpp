#include "euler_products.hpp"

#include "errors.hpp"
#include "qreal.hpp"

namespace zr {

namespace {

void validate(double a, uint64_t P, const prime_table& table) {
  if (!(a > 0)) throw domain_error("a must be positive");
  if (P < 1) throw usage_error("prime cutoff must be at least 1");
  if (P > table.limit) throw usage_error("prime cutoff exceeds the prime table limit");
}

qreal euler_factor(qreal p, qreal half_a) {
  return 1 - 2 * q_exp(-(1 + half_a) * q_log(p)) + 1 / (p * p);
}

// Bound on sum_{p>P} |log(1 - 2 p^{-1-a/2} + p^{-2})|. Primes up to
// P0 = max(P, 11) are handled term by term; beyond P0 every deviation
// y_p = 2 p^{-1-a/2} - p^{-2} satisfies |y_p| <= g(p) := 2 p^{-1-a/2} + p^{-2}
// with g(P0) < 1, so |log(1-y_p)| <= g(p)/(1 - g(P0)) and the sum of g over
// integers > P0 is bounded by its integral.
qreal log_product_tail(double a, uint64_t P) {
  const qreal half_a = qreal(a) / 2;
  const uint64_t P0 = P > 11 ? P : 11;
  qreal explicit_part = 0;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull})
    if (p > P && p <= P0) explicit_part += q_abs(q_log(euler_factor(qreal(p), half_a)));
  const qreal P0q = qreal(P0);
  const qreal integral = 2 * q_exp(-half_a * q_log(P0q)) / half_a + 1 / P0q;
  const qreal y_max = 2 * q_exp(-(1 + half_a) * q_log(P0q)) + 1 / (P0q * P0q);
  return explicit_part + integral / (1 - y_max);
}

// Bound on sum_{p>P} log p * p^{-1-a/2} / (1 - 2p^{-1-a/2} + p^{-2}). The
// Euler factor is >= (1 - 1/p)^2, and x^{-1-a/2} log x is decreasing for
// x >= 3 > e^{1/(1+a/2)}, so the sum beyond P0 = max(P, 3) is bounded by
// the integral P0^{-a/2} (log P0/(a/2) + 1/(a/2)^2).
qreal prime_sum_tail(double a, uint64_t P) {
  const qreal half_a = qreal(a) / 2;
  const uint64_t P0 = P > 3 ? P : 3;
  qreal explicit_part = 0;
  for (uint64_t p : {2ull, 3ull})
    if (p > P && p <= P0)
      explicit_part += q_log(qreal(p)) * q_exp(-(1 + half_a) * q_log(qreal(p))) /
                       euler_factor(qreal(p), half_a);
  const qreal P0q = qreal(P0);
  const qreal lnP0 = q_log(P0q);
  const qreal integral = q_exp(-half_a * lnP0) * (lnP0 / half_a + 1 / (half_a * half_a));
  const qreal inv_factor = 1 / ((1 - 1 / P0q) * (1 - 1 / P0q));
  return explicit_part + integral * inv_factor;
}

struct partials {
  qreal prod;       // product over p <= P
  qreal prime_sum;  // sum over p <= P of log p * p^{-1-a/2} / factor
};

partials accumulate(double a, uint64_t P, const prime_table& table) {
  const qreal half_a = qreal(a) / 2;
  partials out{1, 0};
  for (uint32_t p : table.primes) {
    if (p > P) break;
    const qreal pq = qreal(p);
    const qreal lnp = q_log(pq);
    const qreal factor = 1 - 2 * q_exp(-(1 + half_a) * lnp) + 1 / (pq * pq);
    out.prod *= factor;
    out.prime_sum += lnp * q_exp(-(1 + half_a) * lnp) / factor;
  }
  return out;
}

}  // namespace

euler_value d1(double a, uint64_t P, const prime_table& table, const precision_ctx& ctx) {
  (void)ctx;
  validate(a, P, table);
  const partials part = accumulate(a, P, table);
  const qreal tail = q_abs(part.prod) * q_expm1(log_product_tail(a, P));
  return {to_d(part.prod), to_d(tail), P, a, euler_kind::d1};
}

euler_value d0_tilde(double a, uint64_t P, const prime_table& table, const precision_ctx& ctx) {
  (void)ctx;
  validate(a, P, table);
  const partials part = accumulate(a, P, table);
  const qreal value = 2 * qreal(a) * part.prod * part.prime_sum;
  // |full - partial| <= 2a (|prod_inf - prod_P| S_inf + prod_P (S_inf - S_P))
  // with S_inf <= S_P + tail_S and |prod_inf - prod_P| <= prod_P (e^L - 1).
  const qreal tail_prod = q_abs(part.prod) * q_expm1(log_product_tail(a, P));
  const qreal tail_sum = prime_sum_tail(a, P);
  const qreal tail =
      2 * qreal(a) * (tail_prod * (part.prime_sum + tail_sum) + q_abs(part.prod) * tail_sum);
  return {to_d(value), to_d(tail), P, a, euler_kind::d0_tilde};
}

euler_value d0(double a, uint64_t P, const prime_table& table, const precision_ctx& ctx) {
  validate(a, P, table);
  const euler_value v1 = d1(a, P, table, ctx);
  const euler_value vt = d0_tilde(a, P, table, ctx);
  // log(2/pi) = 2 log 2 - log 2pi
  const qreal coef = 2 * q_log(qreal(2)) - log_2pi_q() + 2 * euler_gamma_q() - 1;
  const qreal value = coef * qreal(v1.value) + qreal(vt.value);
  const qreal tail = q_abs(coef) * qreal(v1.tail_bound) + qreal(vt.tail_bound);
  return {to_d(value), to_d(tail), P, a, euler_kind::d0};
}

}  // namespace zr
