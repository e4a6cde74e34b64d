#pragma once

// Chebyshev interpolation in quad and double precision.
// Convention: f(x) ~ c[0]/2 + sum_{k>=1} c[k] T_k(u), u = (2x - lo - hi)/(hi - lo).

#include <complex>
#include <functional>
#include <vector>

#include "qreal.hpp"

namespace zr {

struct cheb_series_q {
  qreal lo, hi;
  std::vector<qreal> c;
};

struct cheb_series_d {
  double lo, hi;
  std::vector<double> c;
};

struct cheb_series_cd {
  double lo, hi;
  std::vector<std::complex<double>> c;
};

// Fit at the n Chebyshev nodes of the interval.
cheb_series_q cheb_fit_q(const std::function<qreal(qreal)>& f, qreal lo, qreal hi, int n);
cheb_series_cd cheb_fit_cd(const std::function<std::complex<double>(double)>& f,
                           double lo, double hi, int n);

// Derivative series on the same interval (degree drops by one).
cheb_series_q cheb_derivative(const cheb_series_q& s);

qreal cheb_eval_q(const cheb_series_q& s, qreal x);
double cheb_eval_d(const cheb_series_d& s, double x);
std::complex<double> cheb_eval_cd(const cheb_series_cd& s, double x);

// Drop trailing coefficients below eps * max|c|.
void cheb_trim_q(cheb_series_q& s, qreal eps);

cheb_series_d cheb_to_double(const cheb_series_q& s);

}  // namespace zr
