#include "gridthresh/numtheory.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gridthresh {

ArithTables build_tables(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("build_tables: limit must be >= 1");
  const std::size_t n = static_cast<std::size_t>(limit);
  ArithTables t;
  t.limit = limit;
  t.phi.assign(n + 1, 0);
  t.mu.assign(n + 1, 0);
  t.smallest_prime_factor.assign(n + 1, 0);
  t.phi[1] = 1;
  t.mu[1] = 1;
  t.smallest_prime_factor[1] = 1;

  std::vector<std::int32_t> primes;
  for (std::size_t i = 2; i <= n; ++i) {
    if (t.smallest_prime_factor[i] == 0) {
      t.smallest_prime_factor[i] = static_cast<std::int32_t>(i);
      t.phi[i] = static_cast<std::int64_t>(i) - 1;
      t.mu[i] = -1;
      primes.push_back(static_cast<std::int32_t>(i));
    }
    for (std::int32_t p : primes) {
      const std::size_t ip = i * static_cast<std::size_t>(p);
      if (p > t.smallest_prime_factor[i] || ip > n) break;
      t.smallest_prime_factor[ip] = p;
      if (p == t.smallest_prime_factor[i]) {
        t.phi[ip] = t.phi[i] * p;
        t.mu[ip] = 0;
      } else {
        t.phi[ip] = t.phi[i] * (p - 1);
        t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
      }
    }
  }
  return t;
}

std::int64_t coprime_pair_count(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("coprime_pair_count: m,n >= 1");
  const std::int64_t d_max = std::min(m, n);
  const ArithTables t = build_tables(d_max);
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= d_max; ++d) {
    if (t.mu[static_cast<std::size_t>(d)] == 0) continue;
    total += static_cast<std::int64_t>(t.mu[static_cast<std::size_t>(d)]) *
             (m / d) * (n / d);
  }
  return total;
}

std::int64_t coprime_pair_count_direct(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("coprime_pair_count_direct: m,n >= 1");
  std::int64_t total = 0;
  for (std::int64_t p = 1; p <= m; ++p)
    for (std::int64_t q = 1; q <= n; ++q)
      if (std::gcd(p, q) == 1) ++total;
  return total;
}

long double partial_zeta_inverse(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("partial_zeta_inverse: limit >= 1");
  const ArithTables t = build_tables(limit);
  // summed small terms first; rounding error stays near one ulp
  long double sum = 0;
  for (std::int64_t h = limit; h >= 1; --h) {
    const auto mu = t.mu[static_cast<std::size_t>(h)];
    if (mu == 0) continue;
    sum += static_cast<long double>(mu) /
           (static_cast<long double>(h) * static_cast<long double>(h));
  }
  return sum;
}

long double zeta_inverse_tail_bound(std::int64_t limit) {
  // sum_{h>L} 1/h^2 < integral_{L}^{inf} dx/x^2 = 1/L
  return 1.0L / static_cast<long double>(limit);
}

HarmonicCheck harmonic_check(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("harmonic_check: n >= 1");
  HarmonicCheck r;
  long double sum = 0;
  for (std::int64_t i = n; i >= 1; --i) sum += 1.0L / static_cast<long double>(i);
  r.exact_sum = sum;
  r.log_plus_gamma = std::log(static_cast<long double>(n)) + std::numbers::egamma_v<long double>;
  r.abs_error = std::fabs(r.exact_sum - r.log_plus_gamma);
  return r;
}

}  // namespace gridthresh
