#include "chebyshev.hpp"

#include <cmath>
#include <map>

#include "errors.hpp"

namespace zr {

cheb_series_q cheb_fit_q(const std::function<qreal(qreal)>& f, qreal lo, qreal hi, int n) {
  if (n < 2) throw usage_error("cheb_fit_q: need at least 2 nodes");
  const qreal mid = (lo + hi) / 2, half = (hi - lo) / 2;
  std::vector<qreal> fv(n);
  const qreal piq = q_pi();
  for (int j = 0; j < n; ++j)
    fv[j] = f(mid + half * q_cos(piq * (2 * j + 1) / (2 * n)));
  cheb_series_q s{lo, hi, std::vector<qreal>(n)};
  for (int k = 0; k < n; ++k) {
    qreal acc = 0;
    for (int j = 0; j < n; ++j)
      acc += fv[j] * q_cos(piq * k * (2 * j + 1) / (2 * n));
    s.c[k] = 2 * acc / n;
  }
  return s;
}

namespace {
// cos(pi k (2j+1) / (2n)) table for the double fit, cached per n.
const std::vector<double>& cos_table(int n) {
  static std::map<int, std::vector<double>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<double> tab(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      tab[static_cast<size_t>(k) * n + j] =
          std::cos(M_PI * k * (2.0 * j + 1.0) / (2.0 * n));
  return cache.emplace(n, std::move(tab)).first->second;
}
}  // namespace

cheb_series_cd cheb_fit_cd(const std::function<std::complex<double>(double)>& f,
                           double lo, double hi, int n) {
  if (n < 2) throw usage_error("cheb_fit_cd: need at least 2 nodes");
  const double mid = (lo + hi) / 2, half = (hi - lo) / 2;
  const auto& tab = cos_table(n);
  std::vector<std::complex<double>> fv(n);
  for (int j = 0; j < n; ++j) fv[j] = f(mid + half * tab[n + j]);  // row k=1 is cos(theta_j)
  cheb_series_cd s{lo, hi, std::vector<std::complex<double>>(n)};
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc = 0;
    const double* row = &tab[static_cast<size_t>(k) * n];
    for (int j = 0; j < n; ++j) acc += fv[j] * row[j];
    s.c[k] = acc * (2.0 / n);
  }
  return s;
}

cheb_series_q cheb_derivative(const cheb_series_q& s) {
  const int n = static_cast<int>(s.c.size());
  cheb_series_q d{s.lo, s.hi, std::vector<qreal>(std::max(n - 1, 1), qreal(0))};
  if (n < 2) return d;
  std::vector<qreal> tmp(n + 1, qreal(0));
  for (int j = n - 2; j >= 0; --j)
    tmp[j] = tmp[j + 2] + 2 * qreal(j + 1) * s.c[j + 1];
  const qreal scale = 2 / (s.hi - s.lo);
  for (int j = 0; j < n - 1; ++j) d.c[j] = tmp[j] * scale;
  return d;
}

qreal cheb_eval_q(const cheb_series_q& s, qreal x) {
  const qreal u = (2 * x - s.lo - s.hi) / (s.hi - s.lo);
  qreal d1 = 0, d2 = 0;
  for (int k = static_cast<int>(s.c.size()) - 1; k >= 1; --k) {
    const qreal t = d1;
    d1 = 2 * u * d1 - d2 + s.c[k];
    d2 = t;
  }
  return u * d1 - d2 + s.c[0] / 2;
}

double cheb_eval_d(const cheb_series_d& s, double x) {
  const double u = (2 * x - s.lo - s.hi) / (s.hi - s.lo);
  double d1 = 0, d2 = 0;
  for (int k = static_cast<int>(s.c.size()) - 1; k >= 1; --k) {
    const double t = d1;
    d1 = 2 * u * d1 - d2 + s.c[k];
    d2 = t;
  }
  return u * d1 - d2 + 0.5 * s.c[0];
}

std::complex<double> cheb_eval_cd(const cheb_series_cd& s, double x) {
  const double u = (2 * x - s.lo - s.hi) / (s.hi - s.lo);
  std::complex<double> d1 = 0, d2 = 0;
  for (int k = static_cast<int>(s.c.size()) - 1; k >= 1; --k) {
    const std::complex<double> t = d1;
    d1 = 2.0 * u * d1 - d2 + s.c[k];
    d2 = t;
  }
  return u * d1 - d2 + 0.5 * s.c[0];
}

void cheb_trim_q(cheb_series_q& s, qreal eps) {
  qreal mx = 0;
  for (qreal c : s.c) mx = std::max(mx, q_abs(c));
  size_t keep = s.c.size();
  while (keep > 2 && q_abs(s.c[keep - 1]) < eps * mx) --keep;
  s.c.resize(keep);
}

cheb_series_d cheb_to_double(const cheb_series_q& s) {
  cheb_series_d d{to_d(s.lo), to_d(s.hi), {}};
  d.c.reserve(s.c.size());
  for (qreal c : s.c) d.c.push_back(to_d(c));
  return d;
}

}  // namespace zr
