// Acceptance suite: every exit criterion as one pass/fail line.
// Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gridthresh/asymptotics.hpp"
#include "gridthresh/census.hpp"
#include "gridthresh/numtheory.hpp"
#include "gridthresh/proper_pairs.hpp"
#include "gridthresh/threshold.hpp"
#include "oracles.hpp"

using namespace gridthresh;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& name, const std::string& detail) {
  std::printf("[%s] criterion %02d: %s (%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// 1. enumerate_threshold equals the brute-force separability filter for
//    every grid with m*n <= 16; t(2,2)=14, t(3,3)=58.
void criterion_1() {
  bool ok = true;
  std::int64_t grids = 0;
  for (std::int64_t m = 1; m <= 16 && ok; ++m)
    for (std::int64_t n = 1; m * n <= 16; ++n) {
      const GridDims dims(m, n);
      ++grids;
      const auto enumerated = enumerate_threshold(dims);
      const auto brute = testing::brute_force_threshold_functions(dims);
      std::set<std::vector<std::uint64_t>> a, b;
      for (const auto& f : enumerated) a.emplace(f.words().begin(), f.words().end());
      for (const auto& f : brute) b.emplace(f.words().begin(), f.words().end());
      if (a != b) {
        ok = false;
        break;
      }
    }
  const bool goldens = enumerate_threshold(GridDims(2, 2)).size() == 14 &&
                       enumerate_threshold(GridDims(3, 3)).size() == 58;
  report(1, ok && goldens, "threshold enumeration equals 2^(mn) separability oracle",
         std::to_string(grids) + " grids, t(2,2)=14, t(3,3)=58");
}

// 2. Bijection with oriented prime segments for all m,n <= 6.
void criterion_2() {
  bool ok = true;
  std::string detail;
  for (std::int64_t m = 1; m <= 6 && ok; ++m)
    for (std::int64_t n = 1; n <= 6 && ok; ++n) {
      const GridDims dims(m, n);
      const auto segs = oriented_prime_segments(dims);
      std::set<std::vector<std::uint64_t>> distinct;
      for (const auto& s : segs) {
        const GridFunction f = threshold_from_segment(dims, s);
        distinct.emplace(f.words().begin(), f.words().end());
      }
      if (distinct.size() != segs.size() ||
          enumerate_threshold(dims).size() != segs.size() + 2) {
        ok = false;
        detail = "failed at " + std::to_string(m) + "x" + std::to_string(n);
      }
    }
  if (ok) detail = "all grids m,n <= 6, t = #segments + 2 exactly";
  report(2, ok, "segment-function bijection", detail);
}

// 3. Geometric classification is equivalent to value-based properness.
void criterion_3() {
  std::int64_t mismatches = 0, pairs = 0;
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 1; n <= 4; ++n) {
      const GridDims dims(m, n);
      const auto segs = oriented_prime_segments(dims);
      for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
          const SegmentPair pair(segs[i], segs[j]);
          ++pairs;
          if ((classify_pair_geometric(pair) != PairClass::NotProper) !=
              is_proper_pair(dims, pair))
            ++mismatches;
        }
    }
  std::mt19937_64 rng(0);
  const GridDims dims8(8, 8);
  std::int64_t samples = 0;
  while (samples < 100000) {
    const OrientedSegment s1 = testing::random_prime_segment(rng, dims8);
    const OrientedSegment s2 = testing::random_prime_segment(rng, dims8);
    if (s1 == s2) continue;
    ++samples;
    const SegmentPair pair(s1, s2);
    if ((classify_pair_geometric(pair) != PairClass::NotProper) !=
        is_proper_pair(dims8, pair))
      ++mismatches;
  }
  report(3, mismatches == 0, "geometric pair classification equals properness",
         std::to_string(pairs) + " exhaustive + " + std::to_string(samples) +
             " random pairs, " + std::to_string(mismatches) + " exceptions");
}

// 4. Uniqueness of the defining pair for boundary-true functions, m,n <= 5.
void criterion_4() {
  bool ok = true;
  std::int64_t interior_multi = 0;
  for (std::int64_t m = 1; m <= 5; ++m)
    for (std::int64_t n = 1; n <= 5; ++n) {
      const UniquenessReport r = verify_uniqueness(GridDims(m, n));
      if (!r.passed()) ok = false;
      interior_multi += r.multi_preimage_no_boundary;
    }
  report(4, ok, "unique proper pair per boundary-true function",
         "all m,n <= 5; " + std::to_string(interior_multi) +
             " interior functions with several preimages (allowed)");
}

// 5. The two partition identities behind t2 = q + O(...), m,n <= 4 plus
//    (2,6) and (3,5).
void criterion_5() {
  bool ok = true;
  std::string detail = "identities exact on";
  std::vector<std::pair<std::int64_t, std::int64_t>> sizes;
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 1; n <= 4; ++n) sizes.push_back({m, n});
  sizes.push_back({2, 6});
  sizes.push_back({3, 5});
  for (const auto& [m, n] : sizes) {
    const DecompositionReport r = verify_decomposition(GridDims(m, n));
    if (!r.passed()) {
      ok = false;
      detail = "violated at " + std::to_string(m) + "x" + std::to_string(n);
      break;
    }
  }
  if (ok) detail += " " + std::to_string(sizes.size()) + " grids";
  report(5, ok, "2-threshold / proper-pair decomposition identities", detail);
}

// 6. Interior pairs keep both endpoints within distance 1 of the other line.
void criterion_6() {
  bool ok = true;
  std::int64_t checked = 0;
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t n = 1; n <= 6; ++n) {
      const DistanceReport r = verify_distance_claim(GridDims(m, n));
      checked += r.pairs_checked;
      if (!r.passed()) ok = false;
    }
  report(6, ok, "distance-1 bound for interior-defining pairs",
         std::to_string(checked) + " pairs checked, zero violations required");
}

// 7. Convex-position pairs are exactly the ConvexQuad-classified proper pairs.
void criterion_7() {
  bool ok = true;
  std::string detail;
  for (std::int64_t m = 1; m <= 5 && ok; ++m)
    for (std::int64_t n = 1; n <= 5 && ok; ++n) {
      const GridDims dims(m, n);
      const std::int64_t p = count_convex_position_pairs(dims);
      const std::int64_t quad = count_convex_quad_proper_pairs(dims);
      if (p != quad) {
        ok = false;
        detail = "failed at " + std::to_string(m) + "x" + std::to_string(n) + ": p=" +
                 std::to_string(p) + " quad=" + std::to_string(quad);
      }
    }
  if (ok) detail = "all m,n <= 5, exact";
  report(7, ok, "bijection with non-oriented convex-position pairs", detail);
}

// 8. Census reconstruction of p equals the direct count, m,n <= 6 plus (5,7).
void criterion_8() {
  bool ok = true;
  std::string detail;
  std::vector<std::pair<std::int64_t, std::int64_t>> sizes;
  for (std::int64_t m = 2; m <= 6; ++m)
    for (std::int64_t n = 2; n <= 6; ++n) sizes.push_back({m, n});
  sizes.push_back({5, 7});
  for (const auto& [m, n] : sizes) {
    const GridDims dims(m, n);
    const std::int64_t lhs = reconstruct_p(dims);
    const std::int64_t rhs = count_convex_position_pairs(dims);
    if (lhs != rhs) {
      ok = false;
      detail = std::to_string(m) + "x" + std::to_string(n) + ": " + std::to_string(lhs) +
               " != " + std::to_string(rhs);
      break;
    }
  }
  if (ok) detail = "all m,n <= 6 and 5x7, exact";
  report(8, ok, "rectangle-census reconstruction of p", detail);
}

// 9. Mobius-inversion prime counting equals direct enumeration; density of
//    prime points approaches 6/pi^2 on large dilations.
void criterion_9() {
  const ArithTables tables = build_tables(4096);
  std::int64_t mismatches = 0, triangles = 0;
  std::vector<GridPoint> pts;
  for (std::int64_t y = 0; y < 12; ++y)
    for (std::int64_t x = 0; x < 12; ++x) pts.push_back(GridPoint{x, y});
  const std::int64_t np = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : mismatches, triangles)
  for (std::int64_t i = 0; i < np; ++i)
    for (std::int64_t j = i + 1; j < np; ++j)
      for (std::int64_t k = j + 1; k < np; ++k) {
        if (cross_sign(pts[i], pts[j], pts[k]) == 0) continue;
        const LatticeTriangle t(pts[i], pts[j], pts[k]);
        ++triangles;
        for (const GridPoint apex : {pts[i], pts[j], pts[k]})
          if (prime_points_in_triangle_direct(t, apex) !=
              prime_points_in_triangle_mobius(t, apex, tables))
            ++mismatches;
      }

  std::mt19937_64 rng(9);
  for (int it = 0; it < 1000; ++it) {
    const LatticeTriangle t = testing::random_triangle(rng, 100);
    if (prime_points_in_triangle_direct(t, t.a) !=
        prime_points_in_triangle_mobius(t, t.a, tables))
      ++mismatches;
  }

  // density on dilations with Area >= 1e4
  const long double target =
      6.0L / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>);
  bool density_ok = true;
  long double worst = 0;
  for (std::int64_t k : {150, 200, 300}) {
    const LatticeTriangle t({0, 0}, {k, 0}, {0, k});
    const long double area = 0.5L * k * k;
    const long double dev =
        std::fabs(prime_points_in_triangle_mobius(t, {0, 0}, tables) / area - target) / target;
    worst = std::max(worst, dev);
    if (dev > 0.05L) density_ok = false;
  }
  for (std::int64_t k : {80, 120}) {
    const LatticeTriangle t({0, 0}, {2 * k, k}, {k, 2 * k});
    const long double area = 1.5L * k * k;
    const long double dev =
        std::fabs(prime_points_in_triangle_mobius(t, {0, 0}, tables) / area - target) / target;
    worst = std::max(worst, dev);
    if (area >= 10000.0L && dev > 0.05L) density_ok = false;
  }
  report(9, mismatches == 0 && density_ok, "Mobius-inversion prime-segment counting",
         std::to_string(triangles) + " triangles x3 apexes + 1000 random, " +
             std::to_string(mismatches) + " mismatches; worst density deviation " +
             std::to_string(static_cast<double>(worst)));
}

// 10. Census partition against the independent recount; empty z2b on
//     non-coprime rectangles. All u,v <= 16.
void criterion_10() {
  bool ok = true;
  std::string detail;
  const std::int64_t limit = 16;
  std::int64_t bad = 0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(+ : bad)
  for (std::int64_t u = 1; u <= limit; ++u)
    for (std::int64_t v = 1; v <= limit; ++v) {
      const ZCensus c = census(u, v);
      const std::int64_t partition_sum = c.z[0] + c.z[1] + c.z[2] + c.z[3] + c.z[4];
      if (partition_sum != census_reference_total(u, v)) ++bad;
      if (c.z[2] != c.z2a + c.z2b + c.z2c) ++bad;
      if (c.z[1] != c.z1a + c.z1b) ++bad;
      if (std::gcd(u, v) > 1 && c.z2b != 0) ++bad;
    }
  ok = bad == 0;
  detail = ok ? "all u,v <= 16 against the serial recount" : std::to_string(bad) + " failures";
  report(10, ok, "census partition and coprimality structure", detail);
}

// 11. Trend of p(n,n) against 25/(12 pi^4) n^8 on n in {4,8,12,16}.
void criterion_11() {
  long double ratio4 = 0, ratio16 = 0;
  std::string detail = "ratios:";
  for (std::int64_t n : {4, 8, 12, 16}) {
    const std::int64_t p = reconstruct_p(GridDims(n, n));
    const long double ratio = static_cast<long double>(p) / predict(n, n).p_main;
    if (n == 4) ratio4 = ratio;
    if (n == 16) ratio16 = ratio;
    char buf[64];
    std::snprintf(buf, sizeof(buf), " n=%lld %.4f", static_cast<long long>(n),
                  static_cast<double>(ratio));
    detail += buf;
  }
  const bool ok =
      std::fabs(ratio16 - 1.0L) < std::fabs(ratio4 - 1.0L) && ratio16 >= 0.5L && ratio16 <= 1.5L;
  report(11, ok, "p(n,n) approaches the 25/(12 pi^4) n^8 main term", detail);
}

// 12. Bound crossovers at k <= 22 (even) and k <= 23 (odd), exact rationals.
void criterion_12() {
  bool ok = true;
  for (int k = 2; k <= 40; ++k) {
    const bool expected = (k % 2 == 0) ? (k <= 22) : (k <= 23);
    if (k_threshold_bounds(k, 1, 1).improved_is_smaller != expected) ok = false;
  }
  report(12, ok, "k-threshold bound crossovers", "k in 2..40, exact rational comparison");
}

// 13. Appendix coefficient identity and the aggregated class sums.
void criterion_13() {
  const AggregateReport r8 = aggregate_class_sums(GridDims(8, 8));
  const AggregateReport r12 = aggregate_class_sums(GridDims(12, 12));
  const bool identity = r8.coefficient_identity && r12.coefficient_identity;
  const bool improves =
      std::fabs(r12.ratio_mid - 1.0L) < std::fabs(r8.ratio_mid - 1.0L);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "1/24+31/24+3/4=25/12; dominant ratio %.4f @8 -> %.4f @12; z2b %.4f, z1b %.4f @12",
                static_cast<double>(r8.ratio_mid), static_cast<double>(r12.ratio_mid),
                static_cast<double>(r12.ratio_z2b), static_cast<double>(r12.ratio_z1b));
  report(13, identity && improves, "aggregated class sums and coefficient identity", buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  if (g_failures == 0)
    std::printf("acceptance: all 13 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
