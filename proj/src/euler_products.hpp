#pragma once

// The constants of the asymptotic prediction as Euler products / prime sums:
//
//   D1(a)      = prod_p (1 - 2 p^{-1-a/2} + p^{-2})
//   D0tilde(a) = 2a D1(a) sum_p (log p * p^{-1-a/2}) / (1 - 2 p^{-1-a/2} + p^{-2})
//   D0(a)      = (log(2/pi) + 2 gamma - 1) D1(a) + D0tilde(a)
//
// Each value is a partial product/sum over primes <= P together with a
// certified bound on |full - partial| built from integral comparison of the
// dominating series and log(1+x) <= x for the product part.

#include <cstdint>

#include "precision.hpp"
#include "prime_table.hpp"

namespace zr {

enum class euler_kind { d1, d0_tilde, d0 };

struct euler_value {
  double value;
  double tail_bound;  // certified: recomputing with any larger cutoff moves value by <= this
  uint64_t prime_cutoff;
  double a;
  euler_kind kind;
};

euler_value d1(double a, uint64_t P, const prime_table& table, const precision_ctx& ctx);
euler_value d0_tilde(double a, uint64_t P, const prime_table& table, const precision_ctx& ctx);
euler_value d0(double a, uint64_t P, const prime_table& table, const precision_ctx& ctx);

}  // namespace zr
