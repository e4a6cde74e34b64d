#pragma once

// Minimal complex arithmetic over __float128. std::complex<__float128> is not
// reliable across standard libraries, so the few operations needed are spelled
// out here. Division uses Smith's rescaling to avoid overflow.

#include "qreal.hpp"

namespace zr {

struct qcomplex {
  qreal re = 0;
  qreal im = 0;
};

inline qcomplex qc(qreal re, qreal im = 0) { return {re, im}; }

inline qcomplex operator+(qcomplex a, qcomplex b) { return {a.re + b.re, a.im + b.im}; }
inline qcomplex operator-(qcomplex a, qcomplex b) { return {a.re - b.re, a.im - b.im}; }
inline qcomplex operator-(qcomplex a) { return {-a.re, -a.im}; }
inline qcomplex operator*(qcomplex a, qcomplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline qcomplex operator*(qreal s, qcomplex a) { return {s * a.re, s * a.im}; }
inline qcomplex operator*(qcomplex a, qreal s) { return {a.re * s, a.im * s}; }

inline qcomplex operator/(qcomplex a, qcomplex b) {
  if (q_abs(b.re) >= q_abs(b.im)) {
    qreal r = b.im / b.re, d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  qreal r = b.re / b.im, d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}
inline qcomplex operator/(qcomplex a, qreal s) { return {a.re / s, a.im / s}; }
inline qcomplex operator/(qreal s, qcomplex b) { return qc(s) / b; }

inline qcomplex& operator+=(qcomplex& a, qcomplex b) { a = a + b; return a; }
inline qcomplex& operator-=(qcomplex& a, qcomplex b) { a = a - b; return a; }
inline qcomplex& operator*=(qcomplex& a, qcomplex b) { a = a * b; return a; }

inline qcomplex conj(qcomplex a) { return {a.re, -a.im}; }
inline qreal abs(qcomplex a) { return q_hypot(a.re, a.im); }
inline qreal norm(qcomplex a) { return a.re * a.re + a.im * a.im; }
inline qreal arg(qcomplex a) { return q_atan2(a.im, a.re); }

inline qcomplex qc_polar(qreal r, qreal phi) {
  qreal s, c;
  q_sincos(phi, &s, &c);
  return {r * c, r * s};
}

inline qcomplex exp(qcomplex a) { return qc_polar(q_exp(a.re), a.im); }

// Principal branch.
inline qcomplex log(qcomplex a) { return {q_log(abs(a)), arg(a)}; }

// x^w for positive real x: exact in log space.
inline qcomplex pow_rc(qreal x, qcomplex w) {
  qreal lx = q_log(x);
  return qc_polar(q_exp(w.re * lx), w.im * lx);
}

}  // namespace zr
