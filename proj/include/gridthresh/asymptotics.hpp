#ifndef GRIDTHRESH_ASYMPTOTICS_HPP
#define GRIDTHRESH_ASYMPTOTICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gridthresh/threshold.hpp"

namespace gridthresh {

struct Prediction {
  long double t_main = 0;  // 6/pi^2 * m^2 n^2
  long double p_main = 0;  // 25/(12 pi^4) * m^4 n^4
};

// Main terms; pi-derived constants are computed in extended precision at
// call time, never from decimal literals.
Prediction predict(std::int64_t m, std::int64_t n);

struct KBoundComparison {
  int k = 0;
  long double trivial_main = 0;   // 6^k/(pi^2k k!) (mn)^2k
  long double improved_main = 0;  // conjunction-of-2-threshold bound
  bool improved_is_smaller = false;
};

// Compares the two upper-bound coefficients exactly: the pi^(-2k) factor
// cancels, leaving a rational comparison evaluated in big integers.
KBoundComparison k_threshold_bounds(int k, std::int64_t m, std::int64_t n);

struct ConvergenceRow {
  std::int64_t n = 0;
  std::int64_t p_exact = 0;
  long double p_pred = 0;
  long double p_ratio = 0;
  std::optional<std::int64_t> t_exact;
  long double t_pred = 0;
  std::optional<long double> t_ratio;
  std::optional<std::int64_t> q_exact;
  std::optional<std::int64_t> t2_exact;
  std::optional<long double> t2_q_ratio;
  std::optional<long double> t2_p_ratio;
};

struct ConvergenceOptions {
  std::int64_t census_guard = 4096;       // (u+1)(v+1) cap per census
  std::int64_t q_max_cells = 144;         // q computed when n*n <= this
  std::int64_t t2_max_cells = 144;        // t2 computed when n*n <= this
};

// Square-grid sweep: p via the census reconstruction, the rest where the
// guards allow; absent fields stay absent, never estimated.
std::vector<ConvergenceRow> convergence_table(const std::vector<std::int64_t>& sizes,
                                              const ConvergenceOptions& opt = {});

}  // namespace gridthresh

#endif
