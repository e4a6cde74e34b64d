#pragma once

// Complex log-gamma in quad precision: Stirling series after shifting
// Re z up to 40, reflection for Re z < 1/2. Branch is irrelevant to callers
// (results are consumed through exp of summed logs).

#include "qcomplex.hpp"

namespace zr {

qcomplex log_gamma_q(qcomplex z);

// log sin(pi z), stable for large |Im z| (dominant exponential factored out).
qcomplex log_sin_pi_q(qcomplex z);

}  // namespace zr
