#pragma once

// Riemann-Siegel evaluation of zeta on the critical line.
//
//   Z(t)  = 2 sum_{n<=N} n^{-1/2} cos(theta(t) - t log n)
//           + (-1)^{N-1} tau^{-1/2} sum_{r<=3} C_r(p) tau^{-r},
//   tau   = sqrt(t/2pi), N = floor(tau), p = tau - N,
//   zeta(1/2 + it) = e^{-i theta(t)} Z(t).
//
// The correction coefficients C_r are built once from high-order derivatives
// of Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p), fitted by Chebyshev
// series in extended precision. Four correction terms keep the absolute
// error below 1e-8 for t >= rs_min_t; below that threshold evaluation
// silently falls back to the Euler-Maclaurin double kernel, which meets the
// same bound, so the contract holds on the whole range |t| >= 10.

#include <complex>

#include "qreal.hpp"
#include "zeta.hpp"

namespace zr {

// Below this |t| the four-term corrected main sum is not yet reliably under
// 1e-8 (scan: worst 1.9e-8 near t ~ 566, 5.4e-9 near 979, 2.8e-9 above 1200).
inline constexpr double rs_min_t = 1200.0;

// theta(t) = arg Gamma(1/4 + it/2) - t/2 log pi, asymptotic expansion.
qreal rs_theta_q(qreal t);

// Hardy Z function, t >= rs_min_t. terms reports the main-sum length.
struct rs_value {
  double z;
  double err_est;
  int terms;
};
rs_value rs_z(double t);

// zeta(1/2 + it) for |t| >= 10, negative t by conjugation.
zeta_value_d rs_zeta_half(double t);

}  // namespace zr
