#ifndef GRIDTHRESH_CENSUS_HPP
#define GRIDTHRESH_CENSUS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gridthresh/threshold.hpp"

namespace gridthresh {

// Guard on (u+1)*(v+1), the number of grid points of the census rectangle.
inline constexpr std::int64_t kCensusMaxCells = 4096;

// Pairs of prime segments in convex position whose joint bounding box is
// exactly the u x v rectangle anchored at the origin, split by how many of
// the four endpoints sit at rectangle corners, with the i=2 and i=1
// subclasses.
struct ZCensus {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::array<std::int64_t, 5> z{};  // z[i]: exactly i corner endpoints
  std::int64_t z2a = 0;             // corners adjacent
  std::int64_t z2b = 0;             // corners opposite, same segment
  std::int64_t z2c = 0;             // corners opposite, different segments
  std::int64_t z1a = 0;             // non-corner mate of the corner endpoint interior
  std::int64_t z1b = 0;             // ... on the rectangle boundary

  std::int64_t total() const { return z[0] + z[1] + z[2] + z[3] + z[4]; }
};

// Pruned enumeration: segments are bucketed by which rectangle sides they
// touch, and only bucket pairs that jointly touch all four sides are
// scanned. Throws resource_limit_error past the guard.
ZCensus census(std::int64_t u, std::int64_t v);

// Independent recount of |Z(u,v)|: plain double loop over all segment
// pairs, bounding-box test first, convex position via the
// triangle-orientation route. Serial; kept as the reference the pruned
// kernel is validated against.
std::int64_t census_reference_total(std::int64_t u, std::int64_t v);

// p(m,n) = sum_(u<m, v<n) (m-u)(n-v) |Z(u,v)|. census_guard bounds
// (u+1)*(v+1) for every census call.
std::int64_t reconstruct_p(GridDims dims, std::int64_t census_guard = kCensusMaxCells);

// One row per census class: exact count, predicted main term, ratio.
struct ClassConstantRow {
  std::int64_t u = 0, v = 0;
  std::string cls;             // z34, z2a, z2b, z2c, z1a, z1b, z0
  std::int64_t exact = 0;
  long double predicted = 0;   // main term (z34/z2a: the O(..) envelope)
  long double ratio = 0;       // exact / predicted, 0 when predicted == 0
};

std::vector<ClassConstantRow> class_constant_report(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& sizes);

// Exact z1b main term:
// (6 v^2/pi^2) sum_{b coprime v, b<=u} (2u-b) + (6 u^2/pi^2) sum_{c coprime u, c<=v} (2v-c).
long double z1b_predicted(std::int64_t u, std::int64_t v);

struct AggregateReport {
  std::int64_t m = 0, n = 0;
  // exact weighted sums over all censused rectangles
  std::int64_t sum_z2b = 0;
  std::int64_t sum_mid = 0;  // z2c + z1a + z0
  std::int64_t sum_z1b = 0;
  long double pred_z2b = 0;  // (1/24)/pi^4 * m^4 n^4
  long double pred_mid = 0;  // (31/24)/pi^4 * m^4 n^4
  long double pred_z1b = 0;  // (3/4)/pi^4 * m^4 n^4
  long double ratio_z2b = 0, ratio_mid = 0, ratio_z1b = 0;
  bool coefficient_identity = false;  // 1/24 + 31/24 + 3/4 == 25/12 exactly
};

AggregateReport aggregate_class_sums(GridDims dims, std::int64_t census_guard = kCensusMaxCells);

// CSV row: u,v,z0,z1a,z1b,z2a,z2b,z2c,z3,z4,total
std::string census_csv_header();
std::string census_csv_row(const ZCensus& c);

}  // namespace gridthresh

#endif
