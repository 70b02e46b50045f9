#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include <cmath>
#include <numbers>

#include "gridthresh/census.hpp"
#include "gridthresh/errors.hpp"
#include "gridthresh/proper_pairs.hpp"

using namespace gridthresh;

TEST_CASE("census of the unit square") {
  const ZCensus c = census(1, 1);
  CHECK(c.total() == 2);
  CHECK(c.z[4] == 2);
  CHECK(c.z[0] + c.z[1] + c.z[2] + c.z[3] == 0);
}

TEST_CASE("census golden values") {
  {
    const ZCensus c = census(2, 1);
    CHECK(c.total() == 9);
    CHECK(c.z[2] == 4);
    CHECK(c.z2c == 4);
    CHECK(c.z[3] == 4);
    CHECK(c.z[4] == 1);
    CHECK(census_csv_row(c) == "2,1,0,0,0,0,0,4,4,1,9");
  }
  {
    const ZCensus c = census(2, 2);
    CHECK(c.total() == 46);
    CHECK(c.z[0] == 2);
    CHECK(c.z[1] == 16);
    CHECK(c.z1b == 16);
    CHECK(c.z1a == 0);
    CHECK(c.z[2] == 28);
    CHECK(c.z2a == 8);
    CHECK(c.z2b == 0);  // gcd(2,2) > 1
    CHECK(c.z2c == 20);
  }
  {
    const ZCensus c = census(3, 2);
    CHECK(c.total() == 106);
    CHECK(c.z2b == 8);  // 3 and 2 coprime: the diagonal pairs appear
  }
}

TEST_CASE("census subclasses partition their classes") {
  for (std::int64_t u = 1; u <= 7; ++u)
    for (std::int64_t v = 1; v <= 7; ++v) {
      const ZCensus c = census(u, v);
      CHECK(c.z[2] == c.z2a + c.z2b + c.z2c);
      CHECK(c.z[1] == c.z1a + c.z1b);
      if (std::gcd(u, v) > 1) CHECK(c.z2b == 0);
    }
}

TEST_CASE("census transpose symmetry") {
  for (const auto& [u, v] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {3, 2}, {4, 3}, {5, 2}, {6, 4}}) {
    const ZCensus a = census(u, v);
    const ZCensus b = census(v, u);
    CHECK(a.total() == b.total());
    for (int i = 0; i < 5; ++i) CHECK(a.z[i] == b.z[i]);
    CHECK(a.z2a == b.z2a);
    CHECK(a.z2b == b.z2b);
    CHECK(a.z2c == b.z2c);
    CHECK(a.z1a == b.z1a);
    CHECK(a.z1b == b.z1b);
  }
}

TEST_CASE("pruned census equals the serial reference") {
  for (std::int64_t u = 1; u <= 6; ++u)
    for (std::int64_t v = 1; v <= 6; ++v)
      CHECK(census(u, v).total() == census_reference_total(u, v));
}

TEST_CASE("census guards") {
  CHECK_THROWS_AS(census(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(census(64, 64), resource_limit_error);
}

TEST_CASE("reconstruct_p equals the direct pair count") {
  for (std::int64_t m = 2; m <= 5; ++m)
    for (std::int64_t n = 2; n <= 5; ++n)
      CHECK(reconstruct_p(GridDims(m, n)) == count_convex_position_pairs(GridDims(m, n)));
  CHECK(reconstruct_p(GridDims(4, 7)) == count_convex_position_pairs(GridDims(4, 7)));
  CHECK(reconstruct_p(GridDims(5, 5)) == 7080);
  CHECK(reconstruct_p(GridDims(2, 2)) == 2);
  CHECK(reconstruct_p(GridDims(6, 1)) == 0);
  CHECK(reconstruct_p(GridDims(1, 6)) == 0);
  CHECK_THROWS_AS(reconstruct_p(GridDims(70, 70), 4096), resource_limit_error);
}

TEST_CASE("z1b error stays inside its lower-order envelope") {
  // |exact - main| / (u^2 v + u v^2) over a doubling sweep: bounded, and
  // the late-half maximum does not exceed the early-half maximum.
  long double early = 0, late = 0;
  for (std::int64_t s : {2, 4, 6, 8, 12, 16}) {
    const ZCensus c = census(s, s);
    const long double env = 2.0L * s * s * s;
    const long double e = std::fabs(static_cast<long double>(c.z1b) - z1b_predicted(s, s)) / env;
    CHECK(e < 1.0L);
    (s <= 8 ? early : late) = std::max(s <= 8 ? early : late, e);
  }
  CHECK(late <= early);
}

TEST_CASE("z1b exact main term") {
  const long double pi2 =
      std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
  // (6*4/pi^2)*(4-1) twice, by symmetry of (2,2)
  CHECK(z1b_predicted(2, 2) == doctest::Approx(static_cast<double>(144.0L / pi2)));
  // the exact census value stays within a factor-2 band of the main term
  for (const auto& [u, v] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 2}, {3, 3}, {5, 4}, {8, 8}}) {
    const long double ratio = census(u, v).z1b / z1b_predicted(u, v);
    CHECK(ratio > 0.5L);
    CHECK(ratio < 2.0L);
  }
}

TEST_CASE("class_constant_report") {
  const auto rows = class_constant_report({{1, 1}, {4, 4}, {8, 8}});
  REQUIRE(rows.size() == 21);  // 7 classes per size
  // (1,1): z3+z4 = 2 within the O(uv) envelope with constant 2
  CHECK(rows[0].cls == "z34");
  CHECK(rows[0].exact == 2);
  CHECK(rows[0].ratio == doctest::Approx(2.0));
  // z2b rows for non-coprime sizes predict 0 exactly
  for (const auto& r : rows)
    if (r.cls == "z2b" && r.u > 1) {
      CHECK(r.exact == 0);
      CHECK(r.predicted == 0.0L);
    }
  // the dominant-class ratios drift toward 1 from (4,4) to (8,8)
  auto ratio_of = [&rows](const char* cls, std::int64_t u) {
    for (const auto& r : rows)
      if (r.cls == cls && r.u == u) return r.ratio;
    return -1.0L;
  };
  for (const char* cls : {"z2c", "z0"}) {
    const long double r4 = ratio_of(cls, 4), r8 = ratio_of(cls, 8);
    CHECK(std::fabs(r8 - 1.0L) < std::fabs(r4 - 1.0L));
  }
}

TEST_CASE("per-class ratios converge one-sidedly over the doubling sweep") {
  const long double pi = std::numbers::pi_v<long double>;
  const long double pi2 = pi * pi, pi4 = pi2 * pi2;
  // z0 and z1a approach 72/pi^4 u^2 v^2 from below, z2c its 42/pi^4 from above
  long double prev_z0 = 0, prev_z1a = 0, prev_z2c = 10;
  for (std::int64_t k : {4, 8, 16}) {
    const ZCensus c = census(k, k);
    const long double u2v2 = static_cast<long double>(k) * k * k * k;
    const long double r_z0 = c.z[0] / (72.0L / pi4 * u2v2);
    const long double r_z1a = c.z1a / (72.0L / pi4 * u2v2);
    const long double r_z2c = c.z2c / (42.0L / pi4 * u2v2);
    CHECK(r_z0 > prev_z0);
    CHECK(r_z0 < 1.0L);
    CHECK(r_z1a > prev_z1a);
    CHECK(r_z1a < 1.0L);
    CHECK(r_z2c < prev_z2c);
    CHECK(r_z2c > 1.0L);
    prev_z0 = r_z0;
    prev_z1a = r_z1a;
    prev_z2c = r_z2c;
  }
  // z2b on coprime near-square rectangles approaches u^2 v^2 / pi^2 from above
  long double prev_z2b = 10;
  for (std::int64_t k : {4, 8, 16}) {
    const ZCensus c = census(k, k + 1);
    const long double u2v2 = static_cast<long double>(k) * k * (k + 1) * (k + 1);
    const long double r = c.z2b / (u2v2 / pi2);
    CHECK(r < prev_z2b);
    CHECK(r > 1.0L);
    prev_z2b = r;
  }
}

TEST_CASE("aggregate_class_sums") {
  const AggregateReport r = aggregate_class_sums(GridDims(6, 6));
  CHECK(r.coefficient_identity);
  // the weighted sums must reproduce a manual sweep over the same censuses
  std::int64_t s2b = 0, smid = 0, s1b = 0;
  for (std::int64_t u = 1; u < 6; ++u)
    for (std::int64_t v = 1; v < 6; ++v) {
      const ZCensus c = census(u, v);
      const std::int64_t w = (6 - u) * (6 - v);
      s2b += w * c.z2b;
      smid += w * (c.z2c + c.z1a + c.z[0]);
      s1b += w * c.z1b;
    }
  CHECK(r.sum_z2b == s2b);
  CHECK(r.sum_mid == smid);
  CHECK(r.sum_z1b == s1b);
  // and the three weighted sums add up to p minus the lower-order classes
  const std::int64_t p = reconstruct_p(GridDims(6, 6));
  CHECK(s2b + smid + s1b <= p);
  CHECK(r.ratio_mid > 0.3L);
  CHECK(r.ratio_mid < 3.0L);
}

TEST_CASE("census csv header") {
  CHECK(census_csv_header() == "u,v,z0,z1a,z1b,z2a,z2b,z2c,z3,z4,total");
}
