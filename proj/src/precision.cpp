#include "precision.hpp"

#include "bernoulli.hpp"
#include "errors.hpp"

namespace zr {

precision_ctx make_precision_ctx(int digits) {
  if (digits < 15) throw usage_error("digits must be at least 15");
  if (digits > 32) throw usage_error("digits must be at most 32");
  return {digits, q_pow(10, qreal(5 - digits))};
}

qreal pi_q() { return M_PIq; }

qreal euler_gamma_q() {
  static const qreal g = [] {
    const int N = 50, K = 12;
    qreal h = 0;
    for (int n = N; n >= 1; --n) h += qreal(1) / n;
    qreal g = h - q_log(qreal(N)) - qreal(1) / (2 * N);
    qreal n2 = qreal(N) * N, npow = n2;
    for (int k = 1; k <= K; ++k) {
      g += bernoulli_2k(k) / (2 * k * npow);
      npow *= n2;
    }
    return g;
  }();
  return g;
}

qreal log_2pi_q() {
  static const qreal v = q_log(2 * M_PIq);
  return v;
}

}  // namespace zr
