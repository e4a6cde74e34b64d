#pragma once

// Square-free pair sums over m, n <= X with b = 1 - a/2:
//
//   plain:     sum mu(m) mu(n) / ((mn)^b [m^a, n^a])
//   log-ratio: same weights, extra factor log((m^a, n^a) / [m^a, n^a])
//
// Since [m^a, n^a] = (mn/g)^a with g = gcd(m,n) for square-free m, n, each
// weight is f(m) f(n) g^a with f(m) = mu(m) m^{-1-a/2}, and the double sum
// collapses to single sums over d via Mobius inversion of the gcd kernel:
// with W = mu * G (Dirichlet convolution) and S_F(d) = sum_{d|m} F(m),
//   sum_{m,n} F(m) F(n) G(gcd(m,n)) = sum_d W(d) S_F(d)^2,
// giving an O(X log X) evaluation. A direct O(X^2) oracle is kept for tests.
//
// tail_fit measures the empirical decay of R(X) = |S(reference) - S(X)|
// on a grid of X values by least squares in log-log coordinates; the
// reference's own error is estimated from reference/2 and added to every
// residual. tail_estimate extrapolates with a 2-sigma prediction band so it
// can serve as an upper tail estimate at larger X.

#include <cstdint>
#include <vector>

#include "precision.hpp"
#include "prime_table.hpp"
#include "qreal.hpp"

namespace zr {

enum class pair_variant { plain, log_ratio };

struct pair_sum_result {
  qreal value_q;
  double value;
  uint64_t X;
  double a;
  double b;  // always 1 - a/2
  pair_variant variant;
};

pair_sum_result pair_sum(double a, uint64_t X, pair_variant variant,
                         const prime_table& table, const precision_ctx& ctx);

// O(X^2) oracle evaluating every term in log space.
pair_sum_result pair_sum_brute(double a, uint64_t X, pair_variant variant,
                               const prime_table& table, const precision_ctx& ctx);

struct tail_fit_result {
  pair_variant variant;
  double a;
  std::vector<uint64_t> grid;
  std::vector<double> residuals;  // inflated by the reference-error estimate
  double slope;
  double slope_se;
  double intercept;
  double inflation;  // |pair_sum(reference) - pair_sum(reference/2)|
  // least-squares internals for the prediction band
  double x_bar, sxx, s2;
  int n_points;

  // exp(fit(log X) + 2 se_pred): upper prediction band at X.
  double tail_estimate(double X) const;
};

tail_fit_result tail_fit(double a, pair_variant variant, const std::vector<uint64_t>& X_grid,
                         uint64_t reference_X, const prime_table& table, const precision_ctx& ctx);

}  // namespace zr
