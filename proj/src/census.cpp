#include "gridthresh/census.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gridthresh/errors.hpp"

namespace gridthresh {

namespace {

struct SegRec {
  std::int32_t ax, ay, bx, by;
  std::uint8_t mask;  // bit 0: min x == 0, 1: max x == u, 2: min y == 0, 3: max y == v
};

std::vector<SegRec> prime_segments_of_rect(std::int64_t u, std::int64_t v) {
  std::vector<SegRec> segs;
  const std::int64_t w = u + 1, h = v + 1;
  for (std::int64_t ay = 0; ay < h; ++ay)
    for (std::int64_t ax = 0; ax < w; ++ax)
      for (std::int64_t by = ay; by < h; ++by)
        for (std::int64_t bx = (by == ay ? ax + 1 : 0); bx < w; ++bx) {
          if (std::gcd(std::abs(ax - bx), std::abs(ay - by)) != 1) continue;
          std::uint8_t mask = 0;
          if (std::min(ax, bx) == 0) mask |= 1;
          if (std::max(ax, bx) == u) mask |= 2;
          if (std::min(ay, by) == 0) mask |= 4;
          if (std::max(ay, by) == v) mask |= 8;
          segs.push_back(SegRec{static_cast<std::int32_t>(ax), static_cast<std::int32_t>(ay),
                                static_cast<std::int32_t>(bx), static_cast<std::int32_t>(by),
                                mask});
        }
  return segs;
}

inline std::int64_t cr(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
                       std::int64_t cx, std::int64_t cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

inline int sgn(std::int64_t x) { return (x > 0) - (x < 0); }

// Convex position via the supporting-line conditions; endpoints must be
// four distinct points.
inline bool convex_position_raw(const SegRec& s, const SegRec& t) {
  if ((s.ax == t.ax && s.ay == t.ay) || (s.ax == t.bx && s.ay == t.by) ||
      (s.bx == t.ax && s.by == t.ay) || (s.bx == t.bx && s.by == t.by))
    return false;
  const int c1 = sgn(cr(s.ax, s.ay, s.bx, s.by, t.ax, t.ay));
  const int c2 = sgn(cr(s.ax, s.ay, s.bx, s.by, t.bx, t.by));
  if (c1 == 0 || c1 != c2) return false;
  const int c3 = sgn(cr(t.ax, t.ay, t.bx, t.by, s.ax, s.ay));
  const int c4 = sgn(cr(t.ax, t.ay, t.bx, t.by, s.bx, s.by));
  if (c3 == 0 || c3 != c4) return false;
  return true;
}

struct Counters {
  std::int64_t z[5] = {0, 0, 0, 0, 0};
  std::int64_t z2a = 0, z2b = 0, z2c = 0, z1a = 0, z1b = 0;

  void merge(const Counters& o) {
    for (int i = 0; i < 5; ++i) z[i] += o.z[i];
    z2a += o.z2a;
    z2b += o.z2b;
    z2c += o.z2c;
    z1a += o.z1a;
    z1b += o.z1b;
  }
};

inline void classify_qualifying_pair(const SegRec& s, const SegRec& t, std::int64_t u,
                                     std::int64_t v, Counters& c) {
  struct Pt {
    std::int64_t x, y;
    int seg;  // 0: first segment, 1: second
  };
  const Pt pts[4] = {{s.ax, s.ay, 0}, {s.bx, s.by, 0}, {t.ax, t.ay, 1}, {t.bx, t.by, 1}};
  auto is_corner = [u, v](const Pt& p) {
    return (p.x == 0 || p.x == u) && (p.y == 0 || p.y == v);
  };
  int corners[4];
  int ncorners = 0;
  for (int i = 0; i < 4; ++i)
    if (is_corner(pts[i])) corners[ncorners++] = i;
  ++c.z[ncorners];
  if (ncorners == 2) {
    const Pt& x = pts[corners[0]];
    const Pt& y = pts[corners[1]];
    const bool adjacent = (x.x == y.x) || (x.y == y.y);
    if (adjacent)
      ++c.z2a;
    else if (x.seg == y.seg)
      ++c.z2b;
    else
      ++c.z2c;
  } else if (ncorners == 1) {
    const Pt& mate = pts[corners[0] ^ 1];  // the other endpoint of the same segment
    const bool interior = mate.x > 0 && mate.x < u && mate.y > 0 && mate.y < v;
    if (interior)
      ++c.z1a;
    else
      ++c.z1b;
  }
}

}  // namespace

ZCensus census(std::int64_t u, std::int64_t v) {
  if (u < 1 || v < 1) throw std::invalid_argument("census: u,v >= 1");
  if ((u + 1) * (v + 1) > kCensusMaxCells)
    throw resource_limit_error("census: rectangle exceeds enumeration guard");

  const std::vector<SegRec> segs = prime_segments_of_rect(u, v);
  const std::int64_t n = static_cast<std::int64_t>(segs.size());

  // Bucket indices by side-touch mask; a pair qualifies iff the masks join
  // to 15, which is exactly the joint-bounding-box condition.
  std::array<std::vector<std::int32_t>, 16> buckets;
  for (std::int64_t i = 0; i < n; ++i) buckets[segs[i].mask].push_back(static_cast<std::int32_t>(i));

  Counters total;
#pragma omp parallel
  {
    Counters local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const SegRec& s = segs[i];
      const std::uint8_t needed = static_cast<std::uint8_t>(0xF & ~s.mask);
      for (int bm = 0; bm < 16; ++bm) {
        if ((bm & needed) != needed) continue;
        for (std::int32_t j : buckets[bm]) {
          if (j <= i) continue;
          const SegRec& t = segs[j];
          if (!convex_position_raw(s, t)) continue;
          classify_qualifying_pair(s, t, u, v, local);
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }

  ZCensus out;
  out.u = u;
  out.v = v;
  for (int i = 0; i < 5; ++i) out.z[i] = total.z[i];
  out.z2a = total.z2a;
  out.z2b = total.z2b;
  out.z2c = total.z2c;
  out.z1a = total.z1a;
  out.z1b = total.z1b;
  return out;
}

std::int64_t census_reference_total(std::int64_t u, std::int64_t v) {
  if (u < 1 || v < 1) throw std::invalid_argument("census_reference_total: u,v >= 1");
  if ((u + 1) * (v + 1) > kCensusMaxCells)
    throw resource_limit_error("census_reference_total: rectangle exceeds enumeration guard");
  const std::vector<SegRec> segs = prime_segments_of_rect(u, v);
  const std::size_t n = segs.size();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const SegRec& s = segs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const SegRec& t = segs[j];
      if (std::min(std::min(s.ax, s.bx), std::min(t.ax, t.bx)) != 0) continue;
      if (std::max(std::max(s.ax, s.bx), std::max(t.ax, t.bx)) != u) continue;
      if (std::min(std::min(s.ay, s.by), std::min(t.ay, t.by)) != 0) continue;
      if (std::max(std::max(s.ay, s.by), std::max(t.ay, t.by)) != v) continue;
      if (orientation_equivalence_check(GridPoint{s.ax, s.ay}, GridPoint{s.bx, s.by},
                                        GridPoint{t.ax, t.ay}, GridPoint{t.bx, t.by}))
        ++count;
    }
  }
  return count;
}

std::int64_t reconstruct_p(GridDims dims, std::int64_t census_guard) {
  const std::int64_t m = dims.m, n = dims.n;
  for (std::int64_t u = 1; u < m; ++u)
    for (std::int64_t v = 1; v < n; ++v)
      if ((u + 1) * (v + 1) > census_guard)
        throw resource_limit_error("reconstruct_p: census exceeds guard");
  std::int64_t total = 0;
  const std::int64_t tasks = (m - 1) * (n - 1);
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t k = 0; k < tasks; ++k) {
    const std::int64_t u = 1 + k / (n - 1);
    const std::int64_t v = 1 + k % (n - 1);
    total += (m - u) * (n - v) * census(u, v).total();
  }
  return total;
}

long double z1b_predicted(std::int64_t u, std::int64_t v) {
  const long double pi2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
  std::int64_t su = 0, sv = 0;
  for (std::int64_t b = 1; b <= u; ++b)
    if (std::gcd(b, v) == 1) su += 2 * u - b;
  for (std::int64_t c = 1; c <= v; ++c)
    if (std::gcd(c, u) == 1) sv += 2 * v - c;
  return (6.0L * static_cast<long double>(v) * static_cast<long double>(v) / pi2) *
             static_cast<long double>(su) +
         (6.0L * static_cast<long double>(u) * static_cast<long double>(u) / pi2) *
             static_cast<long double>(sv);
}

std::vector<ClassConstantRow> class_constant_report(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& sizes) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double pi2 = pi * pi, pi4 = pi2 * pi2;
  std::vector<ClassConstantRow> rows;
  for (const auto& [u, v] : sizes) {
    const ZCensus c = census(u, v);
    const long double uv = static_cast<long double>(u) * static_cast<long double>(v);
    const long double u2v2 = uv * uv;
    const long double env = static_cast<long double>(u) * uv + static_cast<long double>(v) * uv;

    auto add = [&rows, u, v](const char* cls, std::int64_t exact, long double pred) {
      ClassConstantRow r;
      r.u = u;
      r.v = v;
      r.cls = cls;
      r.exact = exact;
      r.predicted = pred;
      r.ratio = pred != 0 ? static_cast<long double>(exact) / pred : 0;
      rows.push_back(std::move(r));
    };

    add("z34", c.z[3] + c.z[4], uv);  // O(uv) envelope, coefficient 1
    add("z2a", c.z2a, env);           // O(u^2 v + u v^2) envelope
    add("z2b", c.z2b, std::gcd(u, v) == 1 ? u2v2 / pi2 : 0.0L);
    add("z2c", c.z2c, 42.0L / pi4 * u2v2);
    add("z1a", c.z1a, 72.0L / pi4 * u2v2);
    add("z1b", c.z1b, z1b_predicted(u, v));
    add("z0", c.z[0], 72.0L / pi4 * u2v2);
  }
  return rows;
}

AggregateReport aggregate_class_sums(GridDims dims, std::int64_t census_guard) {
  AggregateReport r;
  r.m = dims.m;
  r.n = dims.n;
  const std::int64_t m = dims.m, n = dims.n;
  for (std::int64_t u = 1; u < m; ++u)
    for (std::int64_t v = 1; v < n; ++v)
      if ((u + 1) * (v + 1) > census_guard)
        throw resource_limit_error("aggregate_class_sums: census exceeds guard");
  std::int64_t s2b = 0, smid = 0, s1b = 0;
  const std::int64_t tasks = (m - 1) * (n - 1);
#pragma omp parallel for schedule(dynamic) reduction(+ : s2b, smid, s1b)
  for (std::int64_t k = 0; k < tasks; ++k) {
    const std::int64_t u = 1 + k / (n - 1);
    const std::int64_t v = 1 + k % (n - 1);
    const ZCensus c = census(u, v);
    const std::int64_t w = (m - u) * (n - v);
    s2b += w * c.z2b;
    smid += w * (c.z2c + c.z1a + c.z[0]);
    s1b += w * c.z1b;
  }
  r.sum_z2b = s2b;
  r.sum_mid = smid;
  r.sum_z1b = s1b;
  const long double pi = std::numbers::pi_v<long double>;
  const long double pi4 = pi * pi * pi * pi;
  const long double m4n4 = std::pow(static_cast<long double>(m), 4.0L) *
                           std::pow(static_cast<long double>(n), 4.0L);
  r.pred_z2b = (1.0L / 24.0L) / pi4 * m4n4;
  r.pred_mid = (31.0L / 24.0L) / pi4 * m4n4;
  r.pred_z1b = (3.0L / 4.0L) / pi4 * m4n4;
  r.ratio_z2b = r.pred_z2b != 0 ? s2b / r.pred_z2b : 0;
  r.ratio_mid = r.pred_mid != 0 ? smid / r.pred_mid : 0;
  r.ratio_z1b = r.pred_z1b != 0 ? s1b / r.pred_z1b : 0;
  // 1/24 + 31/24 + 3/4 = 25/12, checked over the common denominator 24.
  r.coefficient_identity = (1 + 31 + 18 == 50) && (50 * 12 == 25 * 24);
  return r;
}

std::string census_csv_header() { return "u,v,z0,z1a,z1b,z2a,z2b,z2c,z3,z4,total"; }

std::string census_csv_row(const ZCensus& c) {
  std::ostringstream os;
  os << c.u << ',' << c.v << ',' << c.z[0] << ',' << c.z1a << ',' << c.z1b << ',' << c.z2a
     << ',' << c.z2b << ',' << c.z2c << ',' << c.z[3] << ',' << c.z[4] << ',' << c.total();
  return os.str();
}

}  // namespace gridthresh
