#include "gridthresh/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "gridthresh/census.hpp"
#include "gridthresh/errors.hpp"
#include "gridthresh/proper_pairs.hpp"

namespace gridthresh {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(std::int64_t base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Prediction predict(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("predict: m,n >= 1");
  const long double pi = std::numbers::pi_v<long double>;
  const long double pi2 = pi * pi, pi4 = pi2 * pi2;
  const long double mn = static_cast<long double>(m) * static_cast<long double>(n);
  Prediction p;
  p.t_main = 6.0L / pi2 * mn * mn;
  p.p_main = 25.0L / (12.0L * pi4) * mn * mn * mn * mn;
  return p;
}

KBoundComparison k_threshold_bounds(int k, std::int64_t m, std::int64_t n) {
  if (k < 1) throw std::invalid_argument("k_threshold_bounds: k >= 1");
  KBoundComparison r;
  r.k = k;

  // trivial coefficient: 6^k / k!; improved: 5^k / (12^(k/2) (k/2)!) for
  // even k, 5^(k-1) 6 / (12^floor(k/2) floor(k/2)! k) for odd k. Both are
  // multiplied by pi^(-2k), so the comparison is pi-free:
  //   imp_num * triv_den < triv_num * imp_den
  const BigInt triv_num = big_pow(6, k);
  const BigInt triv_den = factorial(k);
  BigInt imp_num, imp_den;
  const int half = k / 2;
  if (k % 2 == 0) {
    imp_num = big_pow(5, k);
    imp_den = big_pow(12, half) * factorial(half);
  } else {
    imp_num = big_pow(5, k - 1) * 6;
    imp_den = big_pow(12, half) * factorial(half) * k;
  }
  r.improved_is_smaller = imp_num * triv_den < triv_num * imp_den;

  const long double pi = std::numbers::pi_v<long double>;
  const long double mn2k = std::pow(static_cast<long double>(m) * static_cast<long double>(n),
                                    2.0L * k);
  const long double pi2k = std::pow(pi, 2.0L * k);
  r.trivial_main =
      static_cast<long double>(triv_num) / static_cast<long double>(triv_den) / pi2k * mn2k;
  r.improved_main =
      static_cast<long double>(imp_num) / static_cast<long double>(imp_den) / pi2k * mn2k;
  return r;
}

std::vector<ConvergenceRow> convergence_table(const std::vector<std::int64_t>& sizes,
                                              const ConvergenceOptions& opt) {
  std::vector<ConvergenceRow> rows;
  for (std::int64_t n : sizes) {
    if (n < 2) throw std::invalid_argument("convergence_table: sizes must be >= 2");
    ConvergenceRow row;
    row.n = n;
    const GridDims dims(n, n);
    const Prediction pred = predict(n, n);
    row.p_exact = reconstruct_p(dims, opt.census_guard);
    row.p_pred = pred.p_main;
    row.p_ratio = static_cast<long double>(row.p_exact) / row.p_pred;
    row.t_exact = count_threshold(dims);
    row.t_pred = pred.t_main;
    row.t_ratio = static_cast<long double>(*row.t_exact) / pred.t_main;
    if (dims.cells() <= std::min(opt.q_max_cells, kProperPairMaxCells))
      row.q_exact = count_proper_pairs(dims);
    if (dims.cells() <= std::min(opt.t2_max_cells, kTwoThresholdMaxCells))
      row.t2_exact = count_two_threshold(dims);
    if (row.t2_exact && row.q_exact && *row.q_exact != 0)
      row.t2_q_ratio = static_cast<long double>(*row.t2_exact) /
                       static_cast<long double>(*row.q_exact);
    if (row.t2_exact && row.p_exact != 0)
      row.t2_p_ratio = static_cast<long double>(*row.t2_exact) /
                       static_cast<long double>(row.p_exact);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gridthresh
