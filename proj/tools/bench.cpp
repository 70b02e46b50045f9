// Compares the OpenMP kernels against their serial references.

#include <cstdio>
#include <omp.h>

#include "gridthresh/census.hpp"
#include "gridthresh/proper_pairs.hpp"
#include "gridthresh/threshold.hpp"

using namespace gridthresh;

namespace {

template <typename F>
double time_it(F&& f, std::int64_t& result) {
  const double t0 = omp_get_wtime();
  result = f();
  return omp_get_wtime() - t0;
}

void row(const char* name, std::int64_t serial_result, double serial_s,
         std::int64_t parallel_result, double parallel_s) {
  std::printf("%-28s %14lld %9.3fs %14lld %9.3fs %7.2fx %s\n", name,
              static_cast<long long>(serial_result), serial_s,
              static_cast<long long>(parallel_result), parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0,
              serial_result == parallel_result ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %14s %10s %14s %10s %8s\n", "kernel", "serial", "time", "parallel",
              "time", "speedup");

  {
    std::int64_t rs = 0, rp = 0;
    const GridDims dims(12, 12);
    const double ts = time_it([&] { return count_proper_pairs_serial(dims); }, rs);
    const double tp = time_it([&] { return count_proper_pairs(dims); }, rp);
    row("q(12,12) proper pairs", rs, ts, rp, tp);
  }
  {
    std::int64_t rs = 0, rp = 0;
    const GridDims dims(10, 10);
    const double ts = time_it([&] { return count_two_threshold_serial(dims); }, rs);
    const double tp = time_it([&] { return count_two_threshold(dims); }, rp);
    row("t2(10,10) conjunctions", rs, ts, rp, tp);
  }
  {
    std::int64_t rs = 0, rp = 0;
    const double ts = time_it([&] { return census_reference_total(12, 12); }, rs);
    const double tp = time_it([&] { return census(12, 12).total(); }, rp);
    row("|Z(12,12)| census", rs, ts, rp, tp);
  }
  return 0;
}
