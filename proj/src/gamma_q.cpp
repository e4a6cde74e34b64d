#include "gamma_q.hpp"

#include "bernoulli.hpp"
#include "errors.hpp"
#include "precision.hpp"

namespace zr {

namespace {

// log(1 - w) for small |w| via the series, avoiding cancellation.
qcomplex log1m(qcomplex w) {
  if (abs(w) > qreal(0.5)) return log(qc(1) - w);
  qcomplex term = w, sum = -w;
  for (int k = 2; k <= 80; ++k) {
    term *= w;
    qcomplex add = term / qreal(k);
    sum -= add;
    if (abs(add) < qreal(1e-40) * abs(sum)) break;
  }
  return sum;
}

// Stirling for Re w >= 40: (w - 1/2) log w - w + log(2pi)/2 + sum B_2k/((2k)(2k-1) w^{2k-1}).
qcomplex stirling(qcomplex w) {
  qcomplex lg = (w - qc(0.5)) * log(w) - w + qc(log_2pi_q() / 2);
  const qcomplex w2 = qc(1) / (w * w);
  qcomplex wp = qc(1) / w;
  for (int k = 1; k <= 16; ++k) {
    lg += bernoulli_2k(k) / (qreal(2 * k) * (2 * k - 1)) * wp;
    wp *= w2;
  }
  return lg;
}

}  // namespace

qcomplex log_sin_pi_q(qcomplex z) {
  const qreal piq = pi_q();
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i). Factor out the dominant
  // exponential so only a bounded correction is taken through log.
  if (z.im > qreal(1)) {
    // dominant -e^{-i pi z}/(2i): log = -i pi z - log(2i) + i pi + log(1 - e^{2 i pi z})
    qcomplex ipz = qc(-piq * z.im, piq * z.re);  // i pi z
    return -ipz + qc(-q_log(qreal(2)), piq / 2) + log1m(exp(2 * ipz));
  }
  if (z.im < qreal(-1)) {
    qcomplex ipz = qc(-piq * z.im, piq * z.re);
    return ipz + qc(-q_log(qreal(2)), -piq / 2) + log1m(exp(-2 * ipz));
  }
  qreal s, c, sh = sinhq(piq * z.im), ch = coshq(piq * z.im);
  q_sincos(piq * z.re, &s, &c);
  return log(qc(s * ch, c * sh));
}

qcomplex log_gamma_q(qcomplex z) {
  if (z.re < qreal(0.5)) {
    // Reflection: log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1 - z).
    if (z.im == 0 && z.re == q_floor(z.re))
      throw pole_error("log_gamma_q: pole at non-positive integer");
    return qc(q_log(pi_q())) - log_sin_pi_q(z) - log_gamma_q(qc(1) - z);
  }
  int shift = 0;
  while (z.re + shift < qreal(40)) ++shift;
  qcomplex lg = stirling(z + qc(qreal(shift)));
  for (int j = 0; j < shift; ++j) lg -= log(z + qc(qreal(j)));
  return lg;
}

}  // namespace zr
