#pragma once

// BCHB main term for the mollifier a(h) = mu(n)/n^b at h = n^a:
//
//   M_a(T) = T sum_{h,k} (a(h)/h)(a(k)/k)(h,k)(log(T (h,k)^2/(2 pi h k)) + 2 gamma - 1)
//          = S1 + S2 + S3,
//   S1 = T log T  * sum mu(m) mu(n)/((mn)^b [m^a, n^a])
//   S2 = T (-log 2pi + 2 gamma - 1) * (same sum)
//   S3 = T * sum (same weights) log((m^a, n^a)/[m^a, n^a])
//
// organized over square-free (m, n) pairs so h = n^a is never materialized,
// plus the closed-form prediction D1(a) T log T + D0(a) T for [T, 2T].

#include <cstdint>
#include <utility>
#include <vector>

#include "precision.hpp"
#include "prime_table.hpp"

namespace zr {

struct mollifier_coeffs {
  double a;
  double b;  // 1 - a/2
  uint64_t X;
  std::vector<std::pair<uint64_t, double>> entries;  // (n, mu(n) n^{-b}), squarefree n <= X
};

mollifier_coeffs make_mollifier_coeffs(double a, uint64_t X, const prime_table& table);

struct mollified_prediction {
  double T;
  double a;
  uint64_t X;
  double s1, s2, s3;
  double total;  // s1 + s2 + s3
  double gamma_used;
};

mollified_prediction bchb_main_term(double T, const mollifier_coeffs& coeffs,
                                    const prime_table& table, const precision_ctx& ctx);

// D1(a) T log T + D0(a) T, the predicted value of the [T, 2T] moment.
double theorem_prediction(double T, double a, uint64_t P, const prime_table& table,
                          const precision_ctx& ctx);

}  // namespace zr
