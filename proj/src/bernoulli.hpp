#pragma once

// Bernoulli numbers B_{2k}, used by Euler-Maclaurin summation, the Stirling
// series, and the Euler-gamma evaluation.

#include "qreal.hpp"

namespace zr {

// B_{2k} for k >= 1. Exact rationals up to B_32; beyond that the identity
// B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2pi)^{2k} with a directly summed
// zeta(2k) (the textbook recurrence is catastrophically unstable). k <= 64.
qreal bernoulli_2k(int k);

// (2k)! as qreal, k <= 64.
qreal factorial_q(int n);

}  // namespace zr
