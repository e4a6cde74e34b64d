#include "prime_table.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace zr {

int prime_table::mu(std::uint64_t n) const {
  if (n == 0 || n > limit) throw usage_error("mu: argument outside table limit");
  return mobius[n];
}

prime_table build_tables(std::uint64_t limit) {
  if (limit < 1) throw usage_error("build_tables: limit must be positive");
  if (limit > (1ull << 31))
    throw resource_error("build_tables: limit " + std::to_string(limit) +
                         " exceeds the supported table size");
  prime_table t;
  t.limit = limit;
  t.mobius.assign(limit + 1, 1);
  t.mobius[0] = 0;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      t.primes.push_back(static_cast<std::uint32_t>(i));
      t.mobius[i] = -1;
    }
    for (std::uint32_t p : t.primes) {
      const std::uint64_t ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        t.mobius[ip] = 0;
        break;
      }
      t.mobius[ip] = -t.mobius[i];
    }
  }
  return t;
}

std::vector<std::uint64_t> squarefree_upto(std::uint64_t X, const prime_table& t) {
  if (X < 1) throw usage_error("squarefree_upto: X must be positive");
  if (X > t.limit) throw usage_error("squarefree_upto: X exceeds table limit");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= X; ++n)
    if (t.mobius[n] != 0) out.push_back(n);
  return out;
}

log_gcd_lcm log_gcd_lcm_pow(std::uint64_t m, std::uint64_t n, double a,
                            const prime_table& t) {
  if (t.mu(m) == 0 || t.mu(n) == 0)
    throw usage_error("log_gcd_lcm_pow: arguments must be square-free");
  if (!(a > 0)) throw domain_error("a must be positive");
  const std::uint64_t g = std::gcd(m, n);
  // log lcm = log m + log n - log g; no power is ever materialized.
  const double lg = std::log(static_cast<double>(g));
  const double ll = std::log(static_cast<double>(m)) +
                    std::log(static_cast<double>(n)) - lg;
  return {a * lg, a * ll};
}

}  // namespace zr
