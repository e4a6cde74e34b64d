#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>

#include "chebyshev.hpp"
#include "errors.hpp"
#include "mollifier.hpp"
#include "rs.hpp"

namespace zr {

namespace {

struct gl_rule {
  std::vector<double> x, w;  // ascending nodes on [-1, 1]
};

// Nodes by Newton iteration on P_n in quad precision, cached per order.
const gl_rule& gauss_legendre(int n) {
  static std::map<int, gl_rule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  gl_rule rule;
  rule.x.assign(n, 0.0);
  rule.w.assign(n, 0.0);
  const qreal pi = q_pi();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    qreal x = q_cos(pi * (4 * i + 3) / (4 * n + 2));  // descending initial guesses
    qreal dp = 0;
    for (int iter = 0; iter < 12; ++iter) {
      qreal p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const qreal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const qreal step = p1 / dp;
      x -= step;
      if (q_abs(step) < qreal(1e-32Q)) {
        p0 = 1;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const qreal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        break;
      }
    }
    const qreal w = 2 / ((1 - x * x) * dp * dp);
    rule.x[n - 1 - i] = to_d(x);
    rule.x[i] = -rule.x[n - 1 - i];
    rule.w[i] = rule.w[n - 1 - i] = to_d(w);
  }
  if (n % 2 == 1) rule.x[n / 2] = 0.0;
  return cache.emplace(n, std::move(rule)).first->second;
}

double gl_integrate(const std::function<double(double)>& f, double x0, double x1, int order) {
  const gl_rule& r = gauss_legendre(order);
  const double half = (x1 - x0) / 2, mid = (x0 + x1) / 2;
  double sum = 0;
  for (int i = 0; i < order; ++i) sum += r.w[i] * f(mid + half * r.x[i]);
  return sum * half;
}

struct panel_eval {
  double value;  // order-2p estimate
  double err;    // |order-p - order-2p|
};

panel_eval eval_panel(const std::function<double(double)>& f, double x0, double x1,
                      int order) {
  const double lo_est = gl_integrate(f, x0, x1, order);
  const double hi_est = gl_integrate(f, x0, x1, 2 * order);
  return {hi_est, std::abs(lo_est - hi_est)};
}

void validate_config(const quad_config& cfg) {
  if (cfg.order < 4 || cfg.order > 64)
    throw usage_error("quadrature order must be between 4 and 64");
  if (!(cfg.panel_c > 0) || cfg.panel_c > 2)
    throw usage_error("panel width factor c must satisfy 0 < c <= 2");
  if (!(cfg.rtol > 0)) throw usage_error("rtol must be positive");
  if (cfg.max_depth < 0) throw usage_error("max refinement depth must be nonnegative");
}

struct accumulator {
  double value = 0;
  double err = 0;
  int64_t evals = 0;
};

void refine(const std::function<double(double)>& f, double x0, double x1,
            const panel_eval& r, double budget, int depth, const quad_config& cfg,
            accumulator& acc) {
  if (r.err <= budget) {
    acc.value += r.value;
    acc.err += r.err;
    return;
  }
  if (depth >= cfg.max_depth) {
    std::ostringstream msg;
    msg << "quadrature refinement depth exhausted on panel [" << x0 << ", " << x1 << "]";
    throw accuracy_error(msg.str(), r.err);
  }
  const double mid = (x0 + x1) / 2;
  const panel_eval left = eval_panel(f, x0, mid, cfg.order);
  const panel_eval right = eval_panel(f, mid, x1, cfg.order);
  acc.evals += 2 * 3 * cfg.order;
  refine(f, x0, mid, left, budget / 2, depth + 1, cfg, acc);
  refine(f, mid, x1, right, budget / 2, depth + 1, cfg, acc);
}

}  // namespace

moment_estimate integrate_function(const std::function<double(double)>& f, double lo,
                                   double hi, const quad_config& cfg) {
  validate_config(cfg);
  if (!(hi > lo)) throw usage_error("integration range must be nonempty");
  const double log_scale = std::log(lo / (2 * M_PI));
  if (!(log_scale > 0)) throw domain_error("integration range must start above 2 pi");
  const double target_w = cfg.panel_c * 2 * M_PI / log_scale;
  const int n_panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / target_w)));
  const double w = (hi - lo) / n_panels;

  std::vector<panel_eval> first(n_panels);
  accumulator acc;
  double v0 = 0;
  for (int i = 0; i < n_panels; ++i) {
    first[i] = eval_panel(f, lo + i * w, lo + (i + 1) * w, cfg.order);
    acc.evals += 3 * cfg.order;
    v0 += first[i].value;
  }
  // Half the tolerance budget, split across panels by width, so the final
  // err_est stays below rtol * |integral|.
  const double budget = 0.5 * cfg.rtol * std::abs(v0) / n_panels;
  for (int i = 0; i < n_panels; ++i)
    refine(f, lo + i * w, lo + (i + 1) * w, first[i], budget, 0, cfg, acc);

  return {lo, hi, 0.0, false, acc.value, acc.evals, acc.err};
}

namespace {

// Piecewise Chebyshev interpolant of zeta(1+iu) on [lo, hi]. Panels start
// 16 wide with 128 nodes; a panel whose trailing coefficients have not
// decayed is bisected. Node values come from the double Euler-Maclaurin
// kernel at 5e-12, so the interpolant is good to ~1e-10.
class zeta1_interp {
 public:
  zeta1_interp(double lo, double hi) : lo_(lo), hi_(hi) {
    build(lo - 1, hi + 1, 0);
  }

  std::complex<double> operator()(double u) const {
    size_t idx = std::upper_bound(starts_.begin(), starts_.end(), u) - starts_.begin();
    if (idx > 0) --idx;
    return cheb_eval_cd(segs_[idx], u);
  }

 private:
  void build(double a, double b, int depth) {
    if (b - a > 16.0001 && depth == 0) {
      const int k = static_cast<int>(std::ceil((b - a) / 16.0));
      const double w = (b - a) / k;
      for (int i = 0; i < k; ++i) build_seg(a + i * w, a + (i + 1) * w, 0);
      return;
    }
    build_seg(a, b, depth);
  }

  void build_seg(double a, double b, int depth) {
    cheb_series_cd fit = cheb_fit_cd(
        [](double u) { return zeta_em_d(std::complex<double>(1.0, u), 5e-12).value; }, a, b,
        128);
    double cmax = 0, tail = 0;
    for (size_t k = 0; k < fit.c.size(); ++k) {
      cmax = std::max(cmax, std::abs(fit.c[k]));
      if (k + 8 >= fit.c.size()) tail = std::max(tail, std::abs(fit.c[k]));
    }
    if (tail <= 3e-11 * std::max(1.0, cmax)) {
      starts_.push_back(a);
      segs_.push_back(std::move(fit));
      return;
    }
    if (depth >= 6)
      throw accuracy_error("zeta(1+iu) interpolation failed to converge", tail);
    const double mid = (a + b) / 2;
    build_seg(a, mid, depth + 1);
    build_seg(mid, b, depth + 1);
  }

  double lo_, hi_;
  std::vector<double> starts_;
  std::vector<cheb_series_cd> segs_;
};

// Interpolants are deterministic functions of their range; cache them so a
// scan over several kernels or repeats at the same T reuses the build.
std::shared_ptr<const zeta1_interp> cached_interp(double lo, double hi) {
  static std::map<std::pair<double, double>, std::shared_ptr<const zeta1_interp>> cache;
  auto key = std::make_pair(lo, hi);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<zeta1_interp>(lo, hi)).first;
  return it->second;
}

std::function<double(double)> numerator_sq(const quad_config& cfg, const precision_ctx& ctx) {
  if (cfg.kernel.method == zeta_method::riemann_siegel)
    return [](double t) { return std::norm(rs_zeta_half(t).value); };
  if (cfg.kernel.em_terms > 0) {
    const zeta_eval_config kcfg = cfg.kernel;
    const precision_ctx ctx_copy = ctx;
    return [kcfg, ctx_copy](double t) {
      const zeta_value_q v = zeta_em_q(qc(qreal(0.5Q), qreal(t)), ctx_copy, kcfg.em_terms,
                                       kcfg.em_order);
      return to_d(norm(v.value));
    };
  }
  return [](double t) { return std::norm(zeta_em_d(std::complex<double>(0.5, t), 1e-9).value); };
}

}  // namespace

moment_estimate integrate_ratio_moment(double T, double a, const quad_config& cfg,
                                       const precision_ctx& ctx) {
  validate_config(cfg);
  if (!(T >= 100)) throw domain_error("T must be at least 100");
  if (!(a > 0)) throw domain_error("a must be positive");
  const std::function<double(double)> num = numerator_sq(cfg, ctx);

  std::function<double(double)> integrand;
  if (a * T < 50) {
    integrand = [num, a](double t) {
      return num(t) / std::norm(zeta_em_d(std::complex<double>(1.0, a * t), 5e-12).value);
    };
  } else {
    std::shared_ptr<const zeta1_interp> den = cached_interp(a * T, 2 * a * T);
    integrand = [num, a, den](double t) { return num(t) / std::norm((*den)(a * t)); };
  }

  moment_estimate est = integrate_function(integrand, T, 2 * T, cfg);
  est.a = a;
  est.has_a = true;
  return est;
}

moment_estimate integrate_hl_baseline(double T, const quad_config& cfg,
                                      const precision_ctx& ctx) {
  validate_config(cfg);
  if (!(T >= 100)) throw domain_error("T must be at least 100");
  moment_estimate est = integrate_function(numerator_sq(cfg, ctx), T, 2 * T, cfg);
  est.has_a = false;
  return est;
}

std::vector<scan_row> error_term_scan(const std::vector<double>& T_grid, double a,
                                      const quad_config& cfg, uint64_t P,
                                      const prime_table& table, const precision_ctx& ctx) {
  if (T_grid.empty()) throw usage_error("T grid must be nonempty");
  for (size_t i = 0; i < T_grid.size(); ++i) {
    if (!(T_grid[i] >= 100)) throw domain_error("T must be at least 100");
    if (i > 0 && !(T_grid[i] > T_grid[i - 1]))
      throw usage_error("T grid must be strictly ascending");
  }
  std::vector<scan_row> rows;
  rows.reserve(T_grid.size());
  for (double T : T_grid) {
    const moment_estimate est = integrate_ratio_moment(T, a, cfg, ctx);
    const double pred = theorem_prediction(T, a, P, table, ctx);
    rows.push_back({T, est.value, pred, (est.value - pred) / (T * std::log(T)),
                    est.nodes_used, est.err_est});
  }
  return rows;
}

}  // namespace zr
