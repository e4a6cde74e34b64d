#include "bernoulli.hpp"

#include "errors.hpp"

namespace zr {

qreal factorial_q(int n) {
  if (n < 0 || n > 130) throw usage_error("factorial_q: n out of range");
  qreal f = 1;
  for (int i = 2; i <= n; ++i) f *= qreal(i);
  return f;
}

namespace {

// Exact numerator/denominator pairs for B_2..B_32. Numerators fit in 64 bits.
struct frac { long long num, den; };
constexpr frac kExact[] = {
    {1, 6},            // B_2
    {-1, 30},          // B_4
    {1, 42},           // B_6
    {-1, 30},          // B_8
    {5, 66},           // B_10
    {-691, 2730},      // B_12
    {7, 6},            // B_14
    {-3617, 510},      // B_16
    {43867, 798},      // B_18
    {-174611, 330},    // B_20
    {854513, 138},     // B_22
    {-236364091, 2730},// B_24
    {8553103, 6},      // B_26
    {-23749461029, 870},     // B_28
    {8615841276005, 14322},  // B_30
    {-7709321041217, 510},   // B_32
};

// zeta(2k) by direct summation; converges to quad precision in a few terms
// once 2k is moderately large.
qreal zeta_even_direct(int twok) {
  qreal s = 0;
  for (int j = 40; j >= 1; --j) s += q_pow(qreal(j), qreal(-twok));
  return s;
}

}  // namespace

qreal bernoulli_2k(int k) {
  if (k < 1 || k > 64) throw usage_error("bernoulli_2k: k out of range");
  if (k <= 16) {
    const frac f = kExact[k - 1];
    return qreal(f.num) / qreal(f.den);
  }
  const int twok = 2 * k;
  qreal mag = 2 * factorial_q(twok) * zeta_even_direct(twok) /
              q_pow(2 * q_pi(), qreal(twok));
  return (k % 2 == 1) ? mag : -mag;
}

}  // namespace zr
