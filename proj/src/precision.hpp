#pragma once

// Working-precision policy plus the shared mathematical constants.

#include "qreal.hpp"

namespace zr {

struct precision_ctx {
  int digits;  // target significant decimal digits, 15..32
  qreal tol;   // absolute comparison tolerance, 10^(5 - digits)
};

// digits outside [15, 32] is a usage error (32 is the practical ceiling of
// 113-bit binary significands once a few guard digits are reserved).
precision_ctx make_precision_ctx(int digits);

// pi to full quad precision.
qreal pi_q();

// Euler-Mascheroni constant: gamma = H_N - log N - 1/(2N)
//   + sum_{k=1..K} B_{2k} / (2k N^{2k}),  remainder below the next term;
// N = 50, K = 12 reaches ~1e-37.
qreal euler_gamma_q();

// log(2 pi).
qreal log_2pi_q();

}  // namespace zr
