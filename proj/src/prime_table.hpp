#pragma once

// Linear sieve producing primes and Mobius values in one pass.
// Immutable after construction; shared by every other module.

#include <cstdint>
#include <vector>

namespace zr {

struct prime_table {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;  // ascending primes <= limit
  std::vector<std::int8_t> mobius;    // mobius[n], n in [0, limit]; mobius[0] = 0

  int mu(std::uint64_t n) const;  // usage error if n > limit or n == 0
};

// limit >= 1; refuses allocations beyond ~2^31 entries with a resource error
// naming the requested limit.
prime_table build_tables(std::uint64_t limit);

// Exactly the n <= X with mu(n) != 0, ascending. X <= table.limit.
std::vector<std::uint64_t> squarefree_upto(std::uint64_t X, const prime_table& t);

// (a log gcd(m,n), a log lcm(m,n)): the gcd/lcm of a-th powers in log space,
// valid because gcd(m^a, n^a) = gcd(m,n)^a and likewise for lcm. Requires
// square-free m, n (checked against the table).
struct log_gcd_lcm {
  double log_gcd_pow;
  double log_lcm_pow;
};
log_gcd_lcm log_gcd_lcm_pow(std::uint64_t m, std::uint64_t n, double a,
                            const prime_table& t);

}  // namespace zr
