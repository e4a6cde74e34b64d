#include "zetaratio.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "errors.hpp"
#include "euler_products.hpp"
#include "kernel.hpp"
#include "mollifier.hpp"
#include "pair_sums.hpp"
#include "precision.hpp"
#include "prime_table.hpp"
#include "quadrature.hpp"

namespace {

thread_local std::string g_last_error;
thread_local double g_last_estimate = 0;

zr_status fail(zr_status code, const char* msg, double estimate = 0) {
  g_last_error = msg;
  g_last_estimate = estimate;
  return code;
}

// Runs f, translating C++ exceptions into status codes.
template <typename F>
zr_status guarded(F&& f) {
  try {
    f();
    return ZR_OK;
  } catch (const zr::usage_error& e) {
    return fail(ZR_USAGE, e.what());
  } catch (const zr::domain_error& e) {
    return fail(ZR_DOMAIN, e.what());
  } catch (const zr::accuracy_error& e) {
    return fail(ZR_ACCURACY, e.what(), e.estimate);
  } catch (const zr::pole_error& e) {
    return fail(ZR_POLE, e.what());
  } catch (const zr::resource_error& e) {
    return fail(ZR_RESOURCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZR_INTERNAL, e.what());
  } catch (...) {
    return fail(ZR_INTERNAL, "unknown error");
  }
}

zr_status require(bool ok, const char* msg) {
  return ok ? ZR_OK : fail(ZR_USAGE, msg);
}

zr::zeta_eval_config to_cpp(const zr_zeta_cfg* cfg) {
  zr::zeta_eval_config out;
  if (cfg) {
    out.method = cfg->method == ZR_KERNEL_RIEMANN_SIEGEL ? zr::zeta_method::riemann_siegel
                                                         : zr::zeta_method::euler_maclaurin;
    out.em_terms = cfg->em_terms;
    out.em_order = cfg->em_order;
  }
  return out;
}

zr::quad_config to_cpp(const zr_quad_cfg* cfg) {
  zr::quad_config out;
  if (cfg) {
    out.panel_c = cfg->panel_c;
    out.order = cfg->order;
    out.rtol = cfg->rtol;
    out.max_depth = cfg->max_depth;
    out.kernel = to_cpp(&cfg->kernel);
  }
  return out;
}

zr_moment to_c(const zr::moment_estimate& m) {
  return {m.t_lo, m.t_hi, m.a, m.has_a ? 1 : 0, m.value, m.nodes_used, m.err_est};
}

}  // namespace

struct zr_table {
  zr::prime_table impl;
};

struct zr_ctx {
  zr::precision_ctx impl;
};

extern "C" {

const char* zr_last_error(void) { return g_last_error.c_str(); }

double zr_last_error_estimate(void) { return g_last_estimate; }

const char* zr_version(void) { return "1.0.0"; }

zr_status zr_table_create(uint64_t limit, zr_table** out) {
  if (zr_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] { *out = new zr_table{zr::build_tables(limit)}; });
}

void zr_table_destroy(zr_table* table) { delete table; }

uint64_t zr_table_limit(const zr_table* table) { return table ? table->impl.limit : 0; }

int zr_table_mobius(const zr_table* table, uint64_t n) {
  if (!table || n == 0 || n > table->impl.limit) return -2;
  return table->impl.mu(n);
}

zr_status zr_squarefree_count(const zr_table* table, uint64_t X, uint64_t* out) {
  if (zr_status s = require(table && out, "null argument")) return s;
  return guarded([&] { *out = zr::squarefree_upto(X, table->impl).size(); });
}

zr_status zr_log_gcd_lcm_pow(const zr_table* table, uint64_t m, uint64_t n, double a,
                             double* log_gcd_pow, double* log_lcm_pow) {
  if (zr_status s = require(table && log_gcd_pow && log_lcm_pow, "null argument")) return s;
  return guarded([&] {
    const zr::log_gcd_lcm r = zr::log_gcd_lcm_pow(m, n, a, table->impl);
    *log_gcd_pow = r.log_gcd_pow;
    *log_lcm_pow = r.log_lcm_pow;
  });
}

zr_status zr_ctx_create(int digits, zr_ctx** out) {
  if (zr_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] { *out = new zr_ctx{zr::make_precision_ctx(digits)}; });
}

void zr_ctx_destroy(zr_ctx* ctx) { delete ctx; }

zr_status zr_constants(const zr_ctx* ctx, double* pi_out, double* euler_gamma_out,
                       double* log_2pi_out) {
  if (zr_status s = require(ctx != nullptr, "null context")) return s;
  return guarded([&] {
    if (pi_out) *pi_out = zr::to_d(zr::pi_q());
    if (euler_gamma_out) *euler_gamma_out = zr::to_d(zr::euler_gamma_q());
    if (log_2pi_out) *log_2pi_out = zr::to_d(zr::log_2pi_q());
  });
}

zr_status zr_zeta(const zr_ctx* ctx, zr_complex s, const zr_zeta_cfg* cfg, zr_complex* out,
                  double* err_out) {
  if (zr_status st = require(ctx && out, "null argument")) return st;
  return guarded([&] {
    const zr::kernel_value v =
        zr::zeta_eval(zr::qc(zr::qreal(s.re), zr::qreal(s.im)), to_cpp(cfg), ctx->impl);
    out->re = zr::to_d(v.value.re);
    out->im = zr::to_d(v.value.im);
    if (err_out) *err_out = v.err_bound;
  });
}

zr_status zr_zeta_deriv_real(const zr_ctx* ctx, double sigma, double* out) {
  if (zr_status s = require(ctx && out, "null argument")) return s;
  return guarded([&] { *out = zr::to_d(zr::zeta_deriv_real(zr::qreal(sigma), ctx->impl)); });
}

zr_status zr_inv_zeta_poly(const zr_ctx* ctx, const zr_table* table, double t, double a,
                           uint64_t X, zr_complex* out) {
  if (zr_status s = require(ctx && table && out, "null argument")) return s;
  return guarded([&] {
    const zr::qcomplex v = zr::inv_zeta_poly(t, a, X, table->impl, ctx->impl);
    out->re = zr::to_d(v.re);
    out->im = zr::to_d(v.im);
  });
}

zr_status zr_approx_error(const zr_ctx* ctx, const zr_table* table, double t, double a,
                          uint64_t X, double* out) {
  if (zr_status s = require(ctx && table && out, "null argument")) return s;
  return guarded([&] { *out = zr::approx_error(t, a, X, table->impl, ctx->impl); });
}

namespace {

zr_euler_value to_c(const zr::euler_value& v) {
  int kind = ZR_KIND_D1;
  if (v.kind == zr::euler_kind::d0_tilde) kind = ZR_KIND_D0TILDE;
  if (v.kind == zr::euler_kind::d0) kind = ZR_KIND_D0;
  return {v.value, v.tail_bound, v.prime_cutoff, v.a, kind};
}

}  // namespace

zr_status zr_d1(const zr_ctx* ctx, const zr_table* table, double a, uint64_t P,
                zr_euler_value* out) {
  if (zr_status s = require(ctx && table && out, "null argument")) return s;
  return guarded([&] { *out = to_c(zr::d1(a, P, table->impl, ctx->impl)); });
}

zr_status zr_d0_tilde(const zr_ctx* ctx, const zr_table* table, double a, uint64_t P,
                      zr_euler_value* out) {
  if (zr_status s = require(ctx && table && out, "null argument")) return s;
  return guarded([&] { *out = to_c(zr::d0_tilde(a, P, table->impl, ctx->impl)); });
}

zr_status zr_d0(const zr_ctx* ctx, const zr_table* table, double a, uint64_t P,
                zr_euler_value* out) {
  if (zr_status s = require(ctx && table && out, "null argument")) return s;
  return guarded([&] { *out = to_c(zr::d0(a, P, table->impl, ctx->impl)); });
}

zr_status zr_pair_sum_eval(const zr_ctx* ctx, const zr_table* table, double a, uint64_t X,
                           int variant, zr_pair_sum* out) {
  if (zr_status s = require(ctx && table && out, "null argument")) return s;
  if (zr_status s = require(variant == ZR_PAIR_PLAIN || variant == ZR_PAIR_LOG_RATIO,
                            "variant must be 0 (plain) or 1 (log-ratio)"))
    return s;
  return guarded([&] {
    const zr::pair_sum_result r = zr::pair_sum(
        a, X, variant == ZR_PAIR_PLAIN ? zr::pair_variant::plain : zr::pair_variant::log_ratio,
        table->impl, ctx->impl);
    *out = {r.value, r.X, r.a, r.b, variant};
  });
}

zr_status zr_tail_fit_eval(const zr_ctx* ctx, const zr_table* table, double a, int variant,
                           const uint64_t* grid, size_t n_grid, uint64_t reference_X,
                           double* residuals_out, zr_tail_fit* out) {
  if (zr_status s = require(ctx && table && grid && out, "null argument")) return s;
  if (zr_status s = require(variant == ZR_PAIR_PLAIN || variant == ZR_PAIR_LOG_RATIO,
                            "variant must be 0 (plain) or 1 (log-ratio)"))
    return s;
  return guarded([&] {
    const zr::tail_fit_result r = zr::tail_fit(
        a, variant == ZR_PAIR_PLAIN ? zr::pair_variant::plain : zr::pair_variant::log_ratio,
        std::vector<uint64_t>(grid, grid + n_grid), reference_X, table->impl, ctx->impl);
    if (residuals_out)
      std::memcpy(residuals_out, r.residuals.data(), r.residuals.size() * sizeof(double));
    *out = {r.slope, r.slope_se, r.intercept, r.inflation, r.x_bar, r.sxx, r.s2, r.n_points};
  });
}

zr_status zr_tail_estimate(const zr_tail_fit* fit, double X, double* out) {
  if (zr_status s = require(fit && out, "null argument")) return s;
  if (zr_status s = require(X > 1, "X must exceed 1")) return s;
  return guarded([&] {
    zr::tail_fit_result r;
    r.slope = fit->slope;
    r.intercept = fit->intercept;
    r.x_bar = fit->x_bar;
    r.sxx = fit->sxx;
    r.s2 = fit->s2;
    r.n_points = fit->n_points;
    *out = r.tail_estimate(X);
  });
}

zr_status zr_mollifier_coeff(const zr_table* table, double a, uint64_t X, uint64_t n,
                             double* out) {
  if (zr_status s = require(table && out, "null argument")) return s;
  return guarded([&] {
    const zr::mollifier_coeffs coeffs = zr::make_mollifier_coeffs(a, X, table->impl);
    *out = 0;
    for (const auto& [m, c] : coeffs.entries)
      if (m == n) {
        *out = c;
        break;
      }
  });
}

zr_status zr_bchb_main_term(const zr_ctx* ctx, const zr_table* table, double T, double a,
                            uint64_t X, zr_mollified* out) {
  if (zr_status s = require(ctx && table && out, "null argument")) return s;
  return guarded([&] {
    const zr::mollifier_coeffs coeffs = zr::make_mollifier_coeffs(a, X, table->impl);
    const zr::mollified_prediction p = zr::bchb_main_term(T, coeffs, table->impl, ctx->impl);
    *out = {p.T, p.a, p.X, p.s1, p.s2, p.s3, p.total, p.gamma_used};
  });
}

zr_status zr_theorem_prediction(const zr_ctx* ctx, const zr_table* table, double T, double a,
                                uint64_t P, double* out) {
  if (zr_status s = require(ctx && table && out, "null argument")) return s;
  return guarded([&] { *out = zr::theorem_prediction(T, a, P, table->impl, ctx->impl); });
}

void zr_quad_cfg_default(zr_quad_cfg* out) {
  if (!out) return;
  out->panel_c = 0.5;
  out->order = 16;
  out->rtol = 1e-6;
  out->max_depth = 8;
  out->kernel = {ZR_KERNEL_RIEMANN_SIEGEL, 0, 0};
}

zr_status zr_integrate_ratio_moment(const zr_ctx* ctx, double T, double a,
                                    const zr_quad_cfg* cfg, zr_moment* out) {
  if (zr_status s = require(ctx && out, "null argument")) return s;
  return guarded(
      [&] { *out = to_c(zr::integrate_ratio_moment(T, a, to_cpp(cfg), ctx->impl)); });
}

zr_status zr_integrate_hl_baseline(const zr_ctx* ctx, double T, const zr_quad_cfg* cfg,
                                   zr_moment* out) {
  if (zr_status s = require(ctx && out, "null argument")) return s;
  return guarded([&] { *out = to_c(zr::integrate_hl_baseline(T, to_cpp(cfg), ctx->impl)); });
}

zr_status zr_error_term_scan(const zr_ctx* ctx, const zr_table* table, const double* T_grid,
                             size_t n_grid, double a, const zr_quad_cfg* cfg, uint64_t P,
                             zr_scan_row* rows_out) {
  if (zr_status s = require(ctx && table && T_grid && rows_out, "null argument")) return s;
  return guarded([&] {
    const std::vector<zr::scan_row> rows = zr::error_term_scan(
        std::vector<double>(T_grid, T_grid + n_grid), a, to_cpp(cfg), P, table->impl,
        ctx->impl);
    for (size_t i = 0; i < rows.size(); ++i)
      rows_out[i] = {rows[i].T,         rows[i].lhs,        rows[i].prediction,
                     rows[i].rel_dev,   rows[i].nodes_used, rows[i].err_est};
  });
}

}  // extern "C"
