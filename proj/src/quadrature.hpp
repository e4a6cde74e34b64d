#pragma once

// Adaptive Gauss-Legendre quadrature tuned to the oscillation of zeta on the
// critical line, plus the two moment integrals built on it.
//
// Base panels have width c * 2pi / log(T/2pi) (about half the mean zero gap
// at height T). Each panel is judged by comparing the order-p and order-2p
// rules; panels exceeding their share of the error budget are bisected, to a
// bounded depth. All reductions run in ascending index order, so results are
// deterministic for a fixed configuration.
//
// 1/|zeta(1+iat)|^2 has no poles or zeros on the line Re s = 1, so the ratio
// integrand needs no singularity handling. For long ranges the denominator
// is evaluated through piecewise Chebyshev interpolants of zeta(1+iu), built
// once per u-range and accurate to ~1e-10; short ranges fall back to direct
// evaluation at every node.

#include <cstdint>
#include <functional>

#include "kernel.hpp"
#include "precision.hpp"
#include "prime_table.hpp"

namespace zr {

struct quad_config {
  double panel_c = 0.5;
  int order = 16;  // Gauss-Legendre points per panel; compared against 2x
  double rtol = 1e-6;
  int max_depth = 8;
  zeta_eval_config kernel{zeta_method::riemann_siegel, 0, 0};
};

struct moment_estimate {
  double t_lo;
  double t_hi;
  double a;    // meaningful only when has_a
  bool has_a;
  double value;
  int64_t nodes_used;
  double err_est;  // sum over final panels of |order-p - order-2p|
};

// Generic driver (also the test hook: f == 1 integrates to hi - lo).
moment_estimate integrate_function(const std::function<double(double)>& f, double lo,
                                   double hi, const quad_config& cfg);

// integral over [T, 2T] of |zeta(1/2+it)|^2 / |zeta(1+iat)|^2 dt
moment_estimate integrate_ratio_moment(double T, double a, const quad_config& cfg,
                                       const precision_ctx& ctx);

// integral over [T, 2T] of |zeta(1/2+it)|^2 dt
moment_estimate integrate_hl_baseline(double T, const quad_config& cfg,
                                      const precision_ctx& ctx);

struct scan_row {
  double T;
  double lhs;
  double prediction;
  double rel_dev;  // (lhs - prediction) / (T log T)
  int64_t nodes_used;
  double err_est;
};

std::vector<scan_row> error_term_scan(const std::vector<double>& T_grid, double a,
                                      const quad_config& cfg, uint64_t P,
                                      const prime_table& table, const precision_ctx& ctx);

}  // namespace zr
