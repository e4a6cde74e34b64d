#include "zeta.hpp"

#include <cmath>
#include <vector>

#include "bernoulli.hpp"
#include "errors.hpp"

namespace zr {

namespace {

constexpr int kDefaultOrderCap = 60;
constexpr int kMaxTermsQ = 1 << 23;

// Correction tail starting from precomputed N^{-s}; adds terms while they
// shrink, returns the rigorous remainder bound for the first omitted term.
struct em_tail_q {
  qcomplex sum{};
  qreal bound = 0;
  int order = 0;
};

em_tail_q em_corrections_q(qcomplex s, qreal N, qcomplex Npow_ms, int k_limit,
                           qreal stop_below) {
  em_tail_q out;
  const qreal N2 = N * N;
  qcomplex poch = s;               // (s)_1
  qcomplex Mk = Npow_ms / N;       // N^{-s-1}
  qreal prev_mag = -1;
  for (int k = 1; k <= k_limit; ++k) {
    const qcomplex term = bernoulli_2k(k) / factorial_q(2 * k) * poch * Mk;
    const qreal mag = abs(term);
    const qreal sigma = s.re;
    // Remainder bound if this term were the first omitted one.
    const qreal rem = mag * abs(s + qc(qreal(2 * k - 1))) / (sigma + 2 * k - 1);
    if (prev_mag >= 0 && mag > prev_mag) {
      out.bound = rem;  // asymptotic series started diverging; stop before it
      return out;
    }
    if (mag <= stop_below) {
      out.bound = rem;
      return out;
    }
    out.sum += term;
    out.order = k;
    prev_mag = mag;
    poch *= (s + qc(qreal(2 * k - 1))) * (s + qc(qreal(2 * k)));
    Mk = Mk / N2;
  }
  // Ran out of allowed order: bound by the next term.
  const qcomplex term = bernoulli_2k(k_limit + 1) / factorial_q(2 * k_limit + 2) * poch * Mk;
  out.bound = abs(term) * abs(s + qc(qreal(2 * k_limit + 1))) / (s.re + 2 * k_limit + 1);
  return out;
}

}  // namespace

zeta_value_q zeta_em_fixed_q(qcomplex s, int N, int k_limit) {
  if (s.re == 1 && s.im == 0) throw pole_error("zeta: pole at s = 1");
  if (N < 1) throw usage_error("zeta_em_fixed_q: N must be positive");
  if (k_limit <= 0) k_limit = kDefaultOrderCap;

  qcomplex sum{};
  for (int n = N; n >= 1; --n) {
    const qreal ln = q_log(qreal(n));
    qreal si, co;
    q_sincos(-s.im * ln, &si, &co);
    const qreal r = q_exp(-s.re * ln);
    sum += qc(r * co, r * si);
  }
  const qreal Nq = qreal(N);
  const qcomplex Npow = pow_rc(Nq, -s);              // N^{-s}
  sum += Npow * Nq / (s - qc(1)) - Npow / 2;
  // Corrections cannot push the error below ~eps * |partial sum|; stop there.
  const qreal eps_floor = abs(sum) * qreal(1e-35);
  const em_tail_q tail = em_corrections_q(s, Nq, Npow, k_limit, eps_floor);
  return {sum + tail.sum, tail.bound + eps_floor, N, tail.order};
}

zeta_value_q zeta_em_q(qcomplex s, const precision_ctx& ctx, int em_terms,
                       int em_order) {
  const qreal tol = ctx.tol;
  if (em_terms > 0) {
    zeta_value_q r = zeta_em_fixed_q(s, em_terms, em_order);
    if (r.err_bound > tol)
      throw accuracy_error("zeta: configured em_terms cannot reach the target tolerance",
                           to_d(r.err_bound));
    return r;
  }
  // Default sizing plus the asymptotic requirement |s+2K|/(2 pi N) <= r_hat
  // with r_hat^(2K+1) ~ tol; doubles N if the certified bound still misses.
  const double at = std::abs(to_d(s.im));
  int N = std::max<int>(50, static_cast<int>(at / (2 * M_PI)) + 31);
  // Fold the |s + 2K + 1| ~ |t| remainder factor into the target ratio.
  double r_hat = std::pow(to_d(tol) / (3.0 * (1.0 + at / 51.0)), 1.0 / 51.0);
  r_hat = std::min(0.75, std::max(0.05, r_hat));
  N = std::max<int>(N, static_cast<int>((at + 60) / (2 * M_PI * r_hat)) + 1);
  for (; N <= kMaxTermsQ; N *= 2) {
    zeta_value_q r = zeta_em_fixed_q(s, N, em_order);
    if (r.err_bound <= tol) return r;
  }
  zeta_value_q r = zeta_em_fixed_q(s, kMaxTermsQ, em_order);
  throw accuracy_error("zeta: tolerance unreachable within the term budget",
                       to_d(r.err_bound));
}

qreal zeta_deriv_real_q(qreal sigma, const precision_ctx& ctx) {
  if (!(sigma > 1)) throw domain_error("zeta_deriv_real: sigma must exceed 1");
  // Differentiate each Euler-Maclaurin piece in s. The remainder of the
  // differentiated asymptotic series is estimated by its first omitted term.
  const qreal tol = ctx.tol;
  int N = 50;
  for (;; N *= 2) {
    const qreal lnN = q_log(qreal(N));
    qreal sum = 0;
    for (int n = N; n >= 2; --n) {
      const qreal ln = q_log(qreal(n));
      sum -= ln * q_exp(-sigma * ln);
    }
    const qreal Npow = q_exp(-sigma * lnN);        // N^-sigma
    const qreal N1 = Npow * N;                     // N^{1-sigma}
    const qreal sm1 = sigma - 1;
    sum += -lnN * N1 / sm1 - N1 / (sm1 * sm1);     // d/ds N^{1-s}/(s-1)
    sum += lnN * Npow / 2;                         // d/ds (-N^{-s}/2)

    qreal poch = sigma, dpoch = 1;                 // (s)_1 and its derivative
    qreal Mk = Npow / N;
    qreal bound = 0;
    int k = 1;
    qreal prev = -1;
    const qreal N2 = qreal(N) * N;
    for (; k <= kDefaultOrderCap; ++k) {
      const qreal ck = bernoulli_2k(k) / factorial_q(2 * k);
      const qreal term = ck * Mk * (dpoch - poch * lnN);
      const qreal mag = q_abs(term);
      if (prev >= 0 && mag > prev) { bound = 3 * mag; break; }
      if (mag <= tol / 100) { bound = 3 * mag; break; }
      sum += term;
      prev = mag;
      // extend (s)_{2k-1} -> (s)_{2k+1} and its derivative
      const qreal f1 = sigma + 2 * k - 1, f2 = sigma + 2 * k;
      dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
      poch *= f1 * f2;
      Mk /= N2;
    }
    if (bound <= tol || N >= kMaxTermsQ) {
      if (bound > tol)
        throw accuracy_error("zeta_deriv_real: tolerance unreachable", to_d(bound));
      return sum;
    }
  }
}

zeta_value_d zeta_em_d(std::complex<double> s, double tol_abs) {
  if (s == std::complex<double>(1.0, 0.0)) throw pole_error("zeta: pole at s = 1");
  tol_abs = std::max(tol_abs, 1e-14);
  static std::vector<double> ln;  // ln[n], grown on demand (single-threaded)
  const double at = std::abs(s.imag());
  // K ~ 20 correction terms; r_hat from tol^(1/(2K+1)).  The remainder bound
  // carries a factor |s + 2K - 1| ~ |t|, so size N against tol / (1 + |t|/41)
  // to avoid repeated doubling at large heights.
  double r_hat = std::pow(tol_abs / (3.0 * (1.0 + at / 41.0)), 1.0 / 41.0);
  r_hat = std::min(0.75, std::max(0.2, r_hat));
  int N = std::max<int>(30, static_cast<int>((at + 40) / (2 * M_PI * r_hat)) + 1);
  const double sigma = s.real();
  const double t = s.imag();
  for (;; N *= 2) {
    if (static_cast<size_t>(N) + 1 > ln.size()) {
      size_t old = std::max<size_t>(ln.size(), 2);
      ln.resize(static_cast<size_t>(N) + 1);
      if (old == 2) { ln[0] = 0; ln[1] = 0; }
      for (size_t n = old; n < ln.size(); ++n) ln[n] = std::log(static_cast<double>(n));
    }
    double sre = 0, sim = 0;
    if (sigma == 1.0) {
      for (int n = N; n >= 1; --n) {
        const double w = 1.0 / n;
        sre += w * std::cos(t * ln[n]);
        sim -= w * std::sin(t * ln[n]);
      }
    } else if (sigma == 0.5) {
      for (int n = N; n >= 1; --n) {
        const double w = 1.0 / std::sqrt(static_cast<double>(n));
        sre += w * std::cos(t * ln[n]);
        sim -= w * std::sin(t * ln[n]);
      }
    } else {
      for (int n = N; n >= 1; --n) {
        const double w = std::exp(-sigma * ln[n]);
        sre += w * std::cos(t * ln[n]);
        sim -= w * std::sin(t * ln[n]);
      }
    }
    std::complex<double> sum(sre, sim);
    const std::complex<double> Npow = std::exp(-s * ln[N]);
    const double Nd = N;
    sum += Npow * Nd / (s - 1.0) - 0.5 * Npow;

    std::complex<double> poch = s, Mk = Npow / Nd;
    const double N2 = Nd * Nd;
    double bound = 0, prev = -1;
    static std::vector<double> bk;  // B_{2k}/(2k)! as double
    if (bk.empty()) {
      bk.resize(31);
      for (int k = 1; k <= 30; ++k) bk[k] = to_d(bernoulli_2k(k) / factorial_q(2 * k));
    }
    for (int k = 1; k <= 28; ++k) {
      const std::complex<double> term = bk[k] * poch * Mk;
      const double mag = std::abs(term);
      // Bound on the remainder if this term is the first omitted one; note
      // the |s + 2k - 1| factor, of size |t|, which the stop test must use.
      const double rem = mag * std::abs(s + (2.0 * k - 1.0)) / (sigma + 2 * k - 1);
      if ((prev >= 0 && mag > prev) || rem <= tol_abs / 2) {
        bound = rem;
        break;
      }
      sum += term;
      prev = mag;
      bound = rem;
      poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
      Mk /= N2;
    }
    if (bound <= tol_abs || N >= (1 << 26)) {
      if (bound > tol_abs)
        throw accuracy_error("zeta (double kernel): tolerance unreachable", bound);
      // Report truncation plus a rounding allowance: the main-sum phases
      // t*log(n) lose ~ t*eps each, accumulating like a random walk, which
      // dominates the reported bound once N is in the tens of thousands.
      return {sum, bound + 5e-16 * std::max(at, 100.0), N};
    }
  }
}

}  // namespace zr
