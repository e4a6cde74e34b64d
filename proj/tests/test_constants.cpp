// Euler-product constants and square-free pair sums with their tail fits.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "euler_products.hpp"
#include "pair_sums.hpp"
#include "precision.hpp"
#include "prime_table.hpp"

using namespace zr;

namespace {

double d0_coefficient() {
  // log(2/pi) + 2 gamma - 1
  return to_d(q_log(qreal(2) / pi_q()) + 2 * euler_gamma_q() - 1);
}

}  // namespace

TEST_CASE("d1(2) inverts zeta(2)") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(100000);
  const euler_value v = d1(2.0, 100000, table, ctx);
  const double zeta2 = to_d(pi_q() * pi_q() / 6);
  CHECK(std::abs(v.value * zeta2 - 1.0) <= v.tail_bound + 1e-12);
  CHECK(v.prime_cutoff == 100000);
  CHECK(v.a == 2.0);
  CHECK(v.kind == euler_kind::d1);
  CHECK(v.tail_bound > 0.0);
}

TEST_CASE("d0_tilde(2) matches -4 zeta'(2)/zeta(2)^2") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(100000);
  const euler_value v = d0_tilde(2.0, 100000, table, ctx);
  const double zeta2 = to_d(pi_q() * pi_q() / 6);
  const double dzeta2 = -0.9375482543158438;  // series value, checked elsewhere
  const double reference = -4.0 * dzeta2 / (zeta2 * zeta2);
  CHECK(std::abs(v.value - reference) <= v.tail_bound + 1e-10);
}

TEST_CASE("d1 approaches zeta(2)/zeta(4) for large a") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(10000);
  const euler_value v = d1(30.0, 10000, table, ctx);
  const double limit = 1.5198177546350666;  // zeta(2)/zeta(4)
  // finite-a gap is ~4e-5 (dominated by the p = 2 cross term), plus the tail
  CHECK(std::abs(v.value - limit) <= 1e-4 + v.tail_bound);
}

TEST_CASE("empty products and extreme a") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(10000);
  CHECK(d1(2.0, 1, table, ctx).value == 1.0);
  CHECK(d0_tilde(2.0, 1, table, ctx).value == 0.0);
  CHECK(std::abs(d0_tilde(40.0, 1000, table, ctx).value) < 1e-3);
}

TEST_CASE("tail bound certifies cutoff refinement") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(10000);
  using fn = euler_value (*)(double, uint64_t, const prime_table&, const precision_ctx&);
  for (fn f : {static_cast<fn>(d1), static_cast<fn>(d0_tilde), static_cast<fn>(d0)}) {
    for (double a : {1.0, 2.0, 3.0}) {
      const euler_value coarse = f(a, 2000, table, ctx);
      const euler_value fine = f(a, 8000, table, ctx);
      CHECK(std::abs(fine.value - coarse.value) <= coarse.tail_bound);
      CHECK(fine.tail_bound < coarse.tail_bound);
    }
  }
}

TEST_CASE("d0 assembles from d1 and d0_tilde") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(100000);
  for (double a : {1.0, 2.0, 5.0}) {
    const double v1 = d1(a, 100000, table, ctx).value;
    const double vt = d0_tilde(a, 100000, table, ctx).value;
    const double v0 = d0(a, 100000, table, ctx).value;
    const double assembled = d0_coefficient() * v1 + vt;
    CHECK(v0 == doctest::Approx(assembled).epsilon(1e-15));
  }
  // spot values
  const double v02 = d0(2.0, 100000, table, ctx).value;
  CHECK(v02 == doctest::Approx(1.2053).epsilon(2e-4));
  const double v030 = d0(30.0, 100000, table, ctx).value;
  CHECK(std::abs(v030 - d0_coefficient() * 1.5198177546350666) < 1e-2);
}

TEST_CASE("d1 stays within its a-independent bounds and increases with a") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(10000);
  double prev = 0.0;
  for (int ai = 1; ai <= 8; ++ai) {
    const euler_value v = d1(static_cast<double>(ai), 10000, table, ctx);
    CHECK(v.value > 0.0);
    CHECK(v.value < 1.5198177546350666 + v.tail_bound);
    CHECK(v.value > prev);
    prev = v.value;
  }
}

TEST_CASE("euler product error paths") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(1000);
  try {
    (void)d1(0.0, 1000, table, ctx);
    CHECK(false);
  } catch (const domain_error& e) {
    CHECK(std::string(e.what()) == "a must be positive");
  }
  CHECK_THROWS_AS((void)d1(-2.0, 1000, table, ctx), domain_error);
  CHECK_THROWS_AS((void)d1(2.0, 0, table, ctx), usage_error);
  CHECK_THROWS_AS((void)d1(2.0, 2000, table, ctx), usage_error);
}

TEST_CASE("pair sums at tiny X by hand") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(1000);
  CHECK(pair_sum(2.0, 1, pair_variant::plain, table, ctx).value == 1.0);
  CHECK(pair_sum(2.0, 1, pair_variant::log_ratio, table, ctx).value == 0.0);
  // X = 2, a = 2, b = 0: terms 1 - 1/4 - 1/4 + 1/4
  const pair_sum_result p2 = pair_sum(2.0, 2, pair_variant::plain, table, ctx);
  CHECK(p2.value == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(p2.b == 0.0);
  // log variant: the two cross terms each contribute (1/4) log 4
  const pair_sum_result l2 = pair_sum(2.0, 2, pair_variant::log_ratio, table, ctx);
  CHECK(l2.value == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(pair_sum(3.0, 5, pair_variant::plain, table, ctx).b == doctest::Approx(-0.5));
}

TEST_CASE("grouped evaluation matches the quadratic oracle") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(1000);
  for (double a : {1.0, 2.0, 2.5}) {
    for (pair_variant variant : {pair_variant::plain, pair_variant::log_ratio}) {
      const double fast = pair_sum(a, 300, variant, table, ctx).value;
      const double brute = pair_sum_brute(a, 300, variant, table, ctx).value;
      CHECK(std::abs(fast - brute) <= 1e-13);
    }
  }
}

TEST_CASE("oracle agrees with a from-scratch double loop") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(100);
  const std::vector<std::uint64_t> sf = squarefree_upto(30, table);
  for (double a : {1.0, 2.5}) {
    const double b = 1.0 - a / 2.0;
    double plain = 0.0, logr = 0.0;
    for (std::uint64_t m : sf) {
      for (std::uint64_t n : sf) {
        const std::uint64_t g = std::gcd(m, n);
        const std::uint64_t l = m / g * n;
        const double w = table.mu(m) * table.mu(n) *
                         std::pow(static_cast<double>(m) * n, -b) /
                         std::pow(static_cast<double>(l), a);
        plain += w;
        logr += w * a * (std::log(static_cast<double>(g)) - std::log(static_cast<double>(l)));
      }
    }
    CHECK(pair_sum_brute(a, 30, pair_variant::plain, table, ctx).value ==
          doctest::Approx(plain).epsilon(1e-13));
    CHECK(pair_sum_brute(a, 30, pair_variant::log_ratio, table, ctx).value ==
          doctest::Approx(logr).epsilon(1e-13));
  }
}

TEST_CASE("pair sum error paths") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(1000);
  CHECK_THROWS_AS((void)pair_sum(0.0, 10, pair_variant::plain, table, ctx), domain_error);
  CHECK_THROWS_AS((void)pair_sum(2.0, 0, pair_variant::plain, table, ctx), usage_error);
  CHECK_THROWS_AS((void)pair_sum(2.0, 2000, pair_variant::plain, table, ctx), usage_error);
  CHECK_THROWS_AS((void)pair_sum_brute(2.0, 2001, pair_variant::plain,
                                       build_tables(4000), ctx),
                  resource_error);
}

TEST_CASE("tail fit summarises residual decay") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(1 << 13);
  std::vector<std::uint64_t> grid;
  for (int e = 4; e <= 9; ++e) grid.push_back(1ull << e);
  const tail_fit_result fit =
      tail_fit(2.0, pair_variant::plain, grid, 1ull << 13, table, ctx);

  CHECK(fit.n_points == static_cast<int>(grid.size()));
  CHECK(fit.grid == grid);
  CHECK(fit.residuals.size() == grid.size());
  for (double r : fit.residuals) CHECK(r > 0.0);
  CHECK(fit.slope < 0.0);
  CHECK(fit.slope_se >= 0.0);
  CHECK(fit.inflation >= 0.0);

  // residuals trend downward: medians of the two halves are ordered
  std::vector<double> lo(fit.residuals.begin(), fit.residuals.begin() + 3);
  std::vector<double> hi(fit.residuals.begin() + 3, fit.residuals.end());
  std::sort(lo.begin(), lo.end());
  std::sort(hi.begin(), hi.end());
  CHECK(hi[1] <= lo[1]);

  // the band extrapolates downward for larger X
  CHECK(fit.tail_estimate(1 << 14) < fit.tail_estimate(1 << 10));
  CHECK(fit.tail_estimate(1 << 14) > 0.0);

  // the band stays above the observed residuals (with slack: it is a
  // 2-sigma statement, not a hard bound)
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(fit.residuals[i] <= fit.tail_estimate(static_cast<double>(grid[i])) * 2.0 +
                                  fit.inflation);
}

TEST_CASE("tail fit validation") {
  const precision_ctx ctx = make_precision_ctx(30);
  const prime_table table = build_tables(1 << 12);
  CHECK_THROWS_AS((void)tail_fit(2.0, pair_variant::plain, {16, 32, 64}, 1 << 12, table, ctx),
                  usage_error);
  CHECK_THROWS_AS(
      (void)tail_fit(2.0, pair_variant::plain, {16, 32, 64, 128}, 512, table, ctx),
      usage_error);
}
