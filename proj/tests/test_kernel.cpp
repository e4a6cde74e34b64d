// Zeta evaluation: Euler-Maclaurin and Riemann-Siegel paths, derivative,
// the Mobius Dirichlet polynomial, and its approximation error.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "gamma_q.hpp"
#include "kernel.hpp"
#include "precision.hpp"
#include "prime_table.hpp"
#include "qcomplex.hpp"
#include "zeta.hpp"

using namespace zr;

namespace {

double qabs_d(qcomplex z) { return to_d(abs(z)); }

qcomplex zeta_q(qcomplex s, const precision_ctx& ctx) {
  return zeta_em_q(s, ctx).value;
}

}  // namespace

TEST_CASE("shared constants to 10+ digits") {
  CHECK(to_d(euler_gamma_q()) == doctest::Approx(0.5772156649015329).epsilon(1e-14));
  CHECK(to_d(log_2pi_q()) == doctest::Approx(1.8378770664093455).epsilon(1e-14));
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), an independent route to pi.
  const qreal machin = 16 * q_atan(qreal(1) / 5) - 4 * q_atan(qreal(1) / 239);
  CHECK(to_d(q_abs(machin - pi_q())) < 1e-32);
}

TEST_CASE("precision context validation") {
  CHECK_THROWS_AS((void)make_precision_ctx(14), usage_error);
  CHECK_THROWS_AS((void)make_precision_ctx(33), usage_error);
  const precision_ctx ctx = make_precision_ctx(25);
  CHECK(ctx.digits == 25);
  CHECK(to_d(ctx.tol) == doctest::Approx(1e-20).epsilon(1e-10));
}

TEST_CASE("zeta at classical points") {
  const precision_ctx ctx = make_precision_ctx(28);
  const qreal pi2_6 = pi_q() * pi_q() / 6;
  const zeta_value_q z2 = zeta_em_q(qc(2), ctx);
  CHECK(to_d(q_abs(z2.value.re - pi2_6)) < 1e-23);
  CHECK(to_d(q_abs(z2.value.im)) < 1e-25);
  CHECK(to_d(q_abs(z2.value.re - pi2_6)) <= to_d(z2.err_bound) + 1e-30);

  const zeta_value_q z0 = zeta_em_q(qc(0), ctx);
  CHECK(to_d(z0.value.re) == doctest::Approx(-0.5).epsilon(1e-20));
  CHECK(to_d(q_abs(z0.value.im)) < 1e-25);

  // first nontrivial zero at t = 14.134725141734694...
  const qcomplex near_zero = zeta_q(qc(qreal(0.5), q_parse("14.1347251417")), ctx);
  CHECK(qabs_d(near_zero) < 1e-6);
  CHECK(qabs_d(near_zero) > 1e-13);  // the truncated ordinate is not the zero
}

TEST_CASE("fixed-N evaluation reports an honest remainder bound") {
  const qreal pi2_6 = pi_q() * pi_q() / 6;
  const zeta_value_q z = zeta_em_fixed_q(qc(2), 50, 0);
  CHECK(z.terms == 50);
  CHECK(to_d(z.err_bound) > 0.0);
  // the bound covers the series remainder; allow a few ulps of quad rounding
  CHECK(to_d(q_abs(z.value.re - pi2_6)) <= to_d(z.err_bound) + 1e-33);
}

TEST_CASE("conjugation symmetry on random points") {
  const precision_ctx ctx = make_precision_ctx(25);
  std::mt19937_64 gen(2024);
  auto unif = [&](double lo, double hi) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  };
  const double tol = 4 * to_d(ctx.tol);
  for (int i = 0; i < 100; ++i) {
    const qcomplex s = qc(unif(0.5, 3.0), unif(-100.0, 100.0));
    const qcomplex a = zeta_q(s, ctx);
    const qcomplex b = zeta_q(conj(s), ctx);
    CHECK(qabs_d(a - conj(b)) <= tol);
  }
}

TEST_CASE("functional equation in the critical strip") {
  // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s), assembled in
  // log space with the library's own log-gamma.
  const precision_ctx ctx = make_precision_ctx(25);
  std::mt19937_64 gen(77);
  auto unif = [&](double lo, double hi) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  };
  for (int i = 0; i < 20; ++i) {
    const qcomplex s = qc(unif(0.05, 0.95), unif(-50.0, 50.0));
    const qcomplex lhs = zeta_q(s, ctx);
    const qcomplex log_chi = s * q_log(qreal(2)) + (s - qc(1)) * q_log(pi_q()) +
                             log_sin_pi_q(s / qreal(2)) + log_gamma_q(qc(1) - s);
    const qcomplex rhs = exp(log_chi) * zeta_q(qc(1) - s, ctx);
    CHECK(qabs_d(lhs - rhs) <= 10 * to_d(ctx.tol));
  }
}

TEST_CASE("series length doubling leaves the value fixed") {
  const precision_ctx ctx = make_precision_ctx(20);
  const qcomplex s = qc(qreal(2), qreal(3));
  const zeta_value_q a = zeta_em_q(s, ctx, 200, 0);
  const zeta_value_q b = zeta_em_q(s, ctx, 400, 0);
  CHECK(qabs_d(a.value - b.value) <= 2 * to_d(ctx.tol));
}

TEST_CASE("Riemann-Siegel agrees with Euler-Maclaurin on the critical line") {
  const precision_ctx ctx = make_precision_ctx(15);
  zeta_eval_config rs_cfg;
  rs_cfg.method = zeta_method::riemann_siegel;
  std::mt19937_64 gen(7);
  auto unif = [&](double lo, double hi) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  };
  for (int i = 0; i < 30; ++i) {
    const double t = unif(1e3, 5e4);
    const kernel_value rs = zeta_eval(qc(qreal(0.5), qreal(t)), rs_cfg, ctx);
    const zeta_value_d em = zeta_em_d(std::complex<double>(0.5, t), 1e-9);
    const double diff = std::abs(std::abs(em.value) - qabs_d(rs.value));
    CHECK(diff <= 1e-6);
    CHECK(rs.err_bound <= 1e-8);
  }
}

TEST_CASE("Riemann-Siegel guards") {
  const precision_ctx ctx = make_precision_ctx(15);
  zeta_eval_config cfg;
  cfg.method = zeta_method::riemann_siegel;
  CHECK_THROWS_AS((void)zeta_eval(qc(qreal(0.6), qreal(1000)), cfg, ctx), usage_error);
  CHECK_THROWS_AS((void)zeta_eval(qc(qreal(0.5), qreal(5)), cfg, ctx), usage_error);
}

TEST_CASE("pole at s = 1") {
  const precision_ctx ctx = make_precision_ctx(20);
  CHECK_THROWS_AS((void)zeta_em_q(qc(1), ctx), pole_error);
  zeta_eval_config cfg;  // Euler-Maclaurin
  CHECK_THROWS_AS((void)zeta_eval(qc(1), cfg, ctx), pole_error);
}

TEST_CASE("unreachable tolerance raises accuracy_error with the achieved bound") {
  const precision_ctx ctx = make_precision_ctx(25);
  try {
    (void)zeta_em_q(qc(qreal(0.5), qreal(1000)), ctx, 10, 0);  // N far too small
    CHECK(false);
  } catch (const accuracy_error& e) {
    CHECK(e.estimate > to_d(ctx.tol));
  }
}

TEST_CASE("zeta derivative on the real axis") {
  const precision_ctx ctx = make_precision_ctx(28);
  // reference values: zeta'(2), zeta'(4) from the defining series
  CHECK(to_d(zeta_deriv_real(qreal(2), ctx)) ==
        doctest::Approx(-0.9375482543158438).epsilon(1e-13));
  CHECK(to_d(zeta_deriv_real(qreal(4), ctx)) ==
        doctest::Approx(-0.06891126589612538).epsilon(1e-13));

  // zeta'(10) against the raw series sum_{n>=2} -ln(n) n^{-10}; the tail past
  // n = 300 is below 1e-22.
  qreal series = 0;
  for (int n = 300; n >= 2; --n) series -= q_log(qreal(n)) * q_pow(qreal(n), qreal(-10));
  const qreal d10 = zeta_deriv_real(qreal(10), ctx);
  CHECK(to_d(q_abs(d10 - series)) < 1e-20);
  // The leading term -log(2)/2^10 is a ~3% approximation, no better: the
  // n = 3 term contributes at the percent level.
  const double rel = to_d(q_abs(d10 + q_log(qreal(2)) / 1024) / q_abs(d10));
  CHECK(rel < 0.05);
  CHECK(rel > 0.005);

  CHECK_THROWS_AS((void)zeta_deriv_real(qreal(1), ctx), domain_error);
  CHECK_THROWS_AS((void)zeta_deriv_real(qreal(0.5), ctx), domain_error);
}

TEST_CASE("Mobius Dirichlet polynomial") {
  const precision_ctx ctx = make_precision_ctx(25);
  const prime_table table = build_tables(10000);

  const qcomplex one = inv_zeta_poly(123.0, 2.0, 1, table, ctx);
  CHECK(to_d(one.re) == doctest::Approx(1.0).epsilon(1e-30));
  CHECK(to_d(one.im) == 0.0);

  const qcomplex half = inv_zeta_poly(0.0, 2.0, 2, table, ctx);
  CHECK(to_d(half.re) == doctest::Approx(0.5).epsilon(1e-30));

  // at t = 0 the polynomial is the plain Mertens-weighted sum
  qcomplex v = inv_zeta_poly(0.0, 1.0, 10000, table, ctx);
  double brute = 0.0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const int mu = table.mu(n);
    if (mu) brute += mu / static_cast<double>(n);
  }
  CHECK(std::abs(to_d(v.re) - brute) < 1e-11);
  CHECK(std::abs(to_d(v.im)) < 1e-25);
  CHECK(qabs_d(v) < 0.02);  // the sum tends to zero

  CHECK_THROWS_AS((void)inv_zeta_poly(1.0, 2.0, 0, table, ctx), usage_error);
  CHECK_THROWS_AS((void)inv_zeta_poly(1.0, 2.0, 20000, table, ctx), usage_error);
}

TEST_CASE("approximation error of the polynomial") {
  const precision_ctx ctx = make_precision_ctx(25);
  const prime_table table = build_tables(10000);

  // X = 1: the polynomial is identically 1, so the error is |1/zeta(1+iat)-1|;
  // at t = 50, a = 2 the reference is |1/zeta(1+100i) - 1|.
  CHECK(approx_error(50.0, 2.0, 1, table, ctx) ==
        doctest::Approx(0.3894684330327981).epsilon(1e-9));

  // t = 0: 1/zeta(1) = 0, so the error is |polynomial itself|
  const double e0 = approx_error(0.0, 1.0, 5000, table, ctx);
  const double p0 = qabs_d(inv_zeta_poly(0.0, 1.0, 5000, table, ctx));
  CHECK(e0 == doctest::Approx(p0).epsilon(1e-12));

  // pinned regression values
  CHECK(approx_error(100.0, 2.0, 1000, table, ctx) ==
        doctest::Approx(0.0089991532908794327).epsilon(1e-10));
  CHECK(approx_error(100.0, 2.0, 10, table, ctx) ==
        doctest::Approx(0.14144972822387716).epsilon(1e-10));

  CHECK_THROWS_AS((void)approx_error(1.0, 2.0, 0, table, ctx), usage_error);
  CHECK_THROWS_AS((void)approx_error(1.0, 2.0, 20000, table, ctx), usage_error);
}

TEST_CASE("bulk 1/zeta(1+it) scan stays bounded") {
  std::mt19937_64 gen(11);
  auto unif = [&](double lo, double hi) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  };
  for (int i = 0; i < 1000; ++i) {
    const double t = unif(1e2, 1e6);
    const std::complex<double> v = inv_zeta1_fast(t);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
    CHECK(std::abs(v) < 10.0);
  }
  // spot value against the quad route
  const precision_ctx ctx = make_precision_ctx(25);
  const qcomplex ref = qc(1) / zeta_em_q(qc(qreal(1), qreal(100)), ctx).value;
  const std::complex<double> fast = inv_zeta1_fast(100.0, 1e-12);
  CHECK(std::abs(fast - std::complex<double>(to_d(ref.re), to_d(ref.im))) < 1e-10);
}

TEST_CASE("cutoff rule x_from_beta") {
  CHECK(x_from_beta(1000.0, 1.0) == doctest::Approx(1000.0).epsilon(1e-14));
  const double expected = std::exp(std::sqrt(std::log(50000.0)));
  CHECK(x_from_beta(50000.0, 0.5) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS((void)x_from_beta(1.0, 0.5), domain_error);
  CHECK_THROWS_AS((void)x_from_beta(0.5, 0.5), domain_error);
}
