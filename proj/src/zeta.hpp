#pragma once

// Euler-Maclaurin evaluation of zeta(s) and zeta'(sigma).
//
//   zeta(s) = sum_{n<=N} n^{-s} + N^{1-s}/(s-1) - N^{-s}/2
//           + sum_{k=1..K} B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1} + R_K,
//   |R_K| <= |next term| * |s+2K+1| / (sigma+2K+1),
//
// valid for sigma > -(2K+1), s != 1. The quad path carries the rigorous
// remainder; the double path is the fast kernel for quadrature with a
// coarser absolute target.

#include <complex>

#include "precision.hpp"
#include "qcomplex.hpp"

namespace zr {

struct zeta_value_q {
  qcomplex value;
  qreal err_bound;  // rigorous remainder bound of the evaluation
  int terms;        // N actually used
  int order;        // correction terms actually used
};

// Fixed N; correction order adapts up to k_limit (<= 0 means default 60).
zeta_value_q zeta_em_fixed_q(qcomplex s, int N, int k_limit);

// Auto N: honors explicit em_terms/em_order if positive, otherwise escalates
// N until the remainder bound meets ctx.tol. Throws accuracy_error (carrying
// the achieved bound) when the request cannot be met.
zeta_value_q zeta_em_q(qcomplex s, const precision_ctx& ctx, int em_terms = 0,
                       int em_order = 0);

// zeta'(sigma) for real sigma > 1, to ctx.digits.
qreal zeta_deriv_real_q(qreal sigma, const precision_ctx& ctx);

struct zeta_value_d {
  std::complex<double> value;
  double err_bound;
  int terms;
};

// Double-precision kernel, absolute target tol_abs (>= 1e-13 advised).
zeta_value_d zeta_em_d(std::complex<double> s, double tol_abs);

}  // namespace zr
