#pragma once

// Thin helpers around __float128. All extended-precision arithmetic in the
// library goes through this type; doubles are used only on hot paths whose
// accuracy targets are explicitly coarser (Riemann-Siegel, quadrature nodes).

#include <quadmath.h>

#include <cstdio>
#include <string>

namespace zr {

using qreal = __float128;

inline double to_d(qreal x) { return static_cast<double>(x); }

inline qreal q_abs(qreal x) { return fabsq(x); }
inline qreal q_sqrt(qreal x) { return sqrtq(x); }
inline qreal q_exp(qreal x) { return expq(x); }
inline qreal q_expm1(qreal x) { return expm1q(x); }
inline qreal q_log(qreal x) { return logq(x); }
inline qreal q_pow(qreal b, qreal e) { return powq(b, e); }
inline qreal q_sin(qreal x) { return sinq(x); }
inline qreal q_cos(qreal x) { return cosq(x); }
inline qreal q_atan(qreal x) { return atanq(x); }
inline qreal q_atan2(qreal y, qreal x) { return atan2q(y, x); }
inline qreal q_floor(qreal x) { return floorq(x); }
inline qreal q_hypot(qreal x, qreal y) { return hypotq(x, y); }
inline void q_sincos(qreal x, qreal* s, qreal* c) { sincosq(x, s, c); }

inline qreal q_pi() { return M_PIq; }

// Parse a decimal literal at full quad precision.
inline qreal q_parse(const char* s) { return strtoflt128(s, nullptr); }

// Fixed scientific formatting used for diagnostics (not CLI output).
inline std::string q_str(qreal x, int digits = 33) {
  char buf[128];
  quadmath_snprintf(buf, sizeof buf, "%.*Qe", digits, x);
  return buf;
}

}  // namespace zr
