#include "pair_sums.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace zr {

namespace {

void validate(double a, uint64_t X, const prime_table& table) {
  if (!(a > 0)) throw domain_error("a must be positive");
  if (X < 1) throw usage_error("X must be at least 1");
  if (X > table.limit) throw usage_error("X exceeds the prime table limit");
  if (X > (1ull << 28)) throw resource_error("pair_sum: X too large for dense sieving");
}

// W = mu * G over d <= X for kernel G given at squarefree arguments only
// (gcds of squarefree numbers are squarefree, and S(d) = 0 otherwise).
std::vector<qreal> convolve_mobius(uint64_t X, const prime_table& table,
                                   const std::vector<qreal>& G) {
  std::vector<qreal> W(X + 1, qreal(0));
  for (uint64_t e = 1; e <= X; ++e) {
    if (G[e] == 0) continue;
    const qreal ge = G[e];
    for (uint64_t k = 1, d = e; d <= X; ++k, d += e) {
      const int mu = table.mu(k);
      if (mu > 0)
        W[d] += ge;
      else if (mu < 0)
        W[d] -= ge;
    }
  }
  return W;
}

}  // namespace

pair_sum_result pair_sum(double a, uint64_t X, pair_variant variant,
                         const prime_table& table, const precision_ctx& ctx) {
  (void)ctx;
  validate(a, X, table);
  const qreal aq = qreal(a);
  const qreal exponent = 1 + aq / 2;

  std::vector<qreal> f(X + 1, qreal(0)), lnx(X + 1, qreal(0));
  for (uint64_t m = 1; m <= X; ++m) {
    const int mu = table.mu(m);
    if (mu == 0) continue;
    lnx[m] = q_log(qreal(m));
    f[m] = mu * q_exp(-exponent * lnx[m]);
  }

  // S[d] = sum_{d | m <= X} f(m); only squarefree d can contribute.
  std::vector<qreal> S(X + 1, qreal(0));
  for (uint64_t d = 1; d <= X; ++d) {
    if (table.mu(d) == 0) continue;
    qreal s = 0;
    for (uint64_t m = d; m <= X; m += d) s += f[m];
    S[d] = s;
  }

  std::vector<qreal> G(X + 1, qreal(0));
  for (uint64_t e = 1; e <= X; ++e)
    if (table.mu(e) != 0) G[e] = q_exp(aq * lnx[e]);
  const std::vector<qreal> W = convolve_mobius(X, table, G);

  qreal total = 0;
  if (variant == pair_variant::plain) {
    for (uint64_t d = 1; d <= X; ++d)
      if (table.mu(d) != 0) total += W[d] * S[d] * S[d];
  } else {
    // log((m^a,n^a)/[m^a,n^a]) = 2a log g - a log m - a log n splits into a
    // gcd kernel 2a g^a log g plus two symmetric -a log m factors.
    std::vector<qreal> Sl(X + 1, qreal(0));
    for (uint64_t d = 1; d <= X; ++d) {
      if (table.mu(d) == 0) continue;
      qreal s = 0;
      for (uint64_t m = d; m <= X; m += d) s += f[m] * lnx[m];
      Sl[d] = s;
    }
    std::vector<qreal> GA(X + 1, qreal(0));
    for (uint64_t e = 1; e <= X; ++e)
      if (table.mu(e) != 0) GA[e] = 2 * aq * G[e] * lnx[e];
    const std::vector<qreal> WA = convolve_mobius(X, table, GA);
    for (uint64_t d = 1; d <= X; ++d)
      if (table.mu(d) != 0) total += (WA[d] * S[d] - 2 * aq * W[d] * Sl[d]) * S[d];
  }
  return {total, to_d(total), X, a, 1 - a / 2, variant};
}

pair_sum_result pair_sum_brute(double a, uint64_t X, pair_variant variant,
                               const prime_table& table, const precision_ctx& ctx) {
  (void)ctx;
  validate(a, X, table);
  if (X > 2000) throw resource_error("pair_sum_brute: oracle restricted to small X");
  const std::vector<uint64_t> sf = squarefree_upto(X, table);
  const qreal b = 1 - qreal(a) / 2;
  qreal total = 0;
  for (uint64_t m : sf) {
    for (uint64_t n : sf) {
      const log_gcd_lcm lg = log_gcd_lcm_pow(m, n, a, table);
      const int sign = table.mu(m) * table.mu(n);
      const qreal w =
          sign * q_exp(-b * (q_log(qreal(m)) + q_log(qreal(n))) - qreal(lg.log_lcm_pow));
      total += variant == pair_variant::plain
                   ? w
                   : w * (qreal(lg.log_gcd_pow) - qreal(lg.log_lcm_pow));
    }
  }
  return {total, to_d(total), X, a, 1 - a / 2, variant};
}

double tail_fit_result::tail_estimate(double X) const {
  const double x = std::log(X);
  const double fit = intercept + slope * x;
  const double se_pred =
      std::sqrt(s2 * (1 + 1.0 / n_points + (x - x_bar) * (x - x_bar) / sxx));
  return std::exp(fit + 2 * se_pred);
}

tail_fit_result tail_fit(double a, pair_variant variant, const std::vector<uint64_t>& X_grid,
                         uint64_t reference_X, const prime_table& table,
                         const precision_ctx& ctx) {
  if (X_grid.size() < 4) throw usage_error("tail_fit: grid needs at least 4 points");
  uint64_t max_x = 0;
  for (uint64_t x : X_grid) max_x = std::max(max_x, x);
  if (reference_X < 16 * max_x)
    throw usage_error("tail_fit: reference_X must be at least 16 times the largest grid point");

  const pair_sum_result ref = pair_sum(a, reference_X, variant, table, ctx);
  const pair_sum_result ref_half = pair_sum(a, reference_X / 2, variant, table, ctx);
  const double inflation = to_d(q_abs(ref.value_q - ref_half.value_q));

  tail_fit_result out;
  out.variant = variant;
  out.a = a;
  out.grid = X_grid;
  out.inflation = inflation;
  out.n_points = static_cast<int>(X_grid.size());
  std::vector<double> xs, ys;
  for (uint64_t X : X_grid) {
    const pair_sum_result ps = pair_sum(a, X, variant, table, ctx);
    double r = to_d(q_abs(ref.value_q - ps.value_q)) + inflation;
    if (r < DBL_MIN) r = DBL_MIN;
    out.residuals.push_back(r);
    xs.push_back(std::log(static_cast<double>(X)));
    ys.push_back(std::log(r));
  }

  const int n = out.n_points;
  const double x_bar = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double y_bar = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - x_bar) * (xs[i] - x_bar);
    sxy += (xs[i] - x_bar) * (ys[i] - y_bar);
  }
  out.slope = sxy / sxx;
  out.intercept = y_bar - out.slope * x_bar;
  double rss = 0;
  for (int i = 0; i < n; ++i) {
    const double e = ys[i] - (out.intercept + out.slope * xs[i]);
    rss += e * e;
  }
  out.s2 = rss / (n - 2);
  out.slope_se = std::sqrt(out.s2 / sxx);
  out.x_bar = x_bar;
  out.sxx = sxx;
  return out;
}

}  // namespace zr
