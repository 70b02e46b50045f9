#ifndef GRIDTHRESH_NUMTHEORY_HPP
#define GRIDTHRESH_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace gridthresh {

// Sieved arithmetic functions on 1..limit, built in one linear pass.
// All tables are read-only after construction and safe to share across
// threads.
struct ArithTables {
  std::int64_t limit = 0;
  std::vector<std::int64_t> phi;              // phi[k], k in 1..limit
  std::vector<std::int8_t> mu;                // mu[k] in {-1,0,1}
  std::vector<std::int32_t> smallest_prime_factor;  // spf[k], spf[1] = 1

  bool is_prime(std::int64_t k) const {
    return k >= 2 && smallest_prime_factor[static_cast<std::size_t>(k)] == k;
  }
};

// Linear sieve. Throws std::invalid_argument for limit = 0.
ArithTables build_tables(std::int64_t limit);

// Exact #{(p,q) : 1<=p<=m, 1<=q<=n, gcd(p,q)=1}, computed as
// sum_d mu(d) floor(m/d) floor(n/d).
std::int64_t coprime_pair_count(std::int64_t m, std::int64_t n);

// Reference O(mn) gcd double loop; kept for cross-checking the sieve route.
std::int64_t coprime_pair_count_direct(std::int64_t m, std::int64_t n);

// Partial sum of mu(h)/h^2 for h = 1..limit; converges to 6/pi^2.
long double partial_zeta_inverse(std::int64_t limit);

// Upper bound on |partial_zeta_inverse(limit) - 6/pi^2|: the tail
// sum_{h>limit} 1/h^2 <= 1/limit.
long double zeta_inverse_tail_bound(std::int64_t limit);

struct HarmonicCheck {
  long double exact_sum = 0;          // sum 1/i, i = 1..n
  long double log_plus_gamma = 0;     // ln n + Euler-Mascheroni gamma
  long double abs_error = 0;
};

HarmonicCheck harmonic_check(std::int64_t n);

}  // namespace gridthresh

#endif
