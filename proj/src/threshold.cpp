#include "gridthresh/threshold.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "gridthresh/errors.hpp"

namespace gridthresh {

GridDims::GridDims(std::int64_t m_, std::int64_t n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) throw std::invalid_argument("GridDims: m,n >= 1");
  if (m * n > kGridMaxCells) throw std::invalid_argument("GridDims: m*n exceeds memory guard");
}

GridFunction::GridFunction(GridDims dims)
    : dims_(dims),
      words_(static_cast<std::size_t>((dims.cells() + 63) / 64), 0) {}

GridFunction GridFunction::constant(GridDims dims, bool value) {
  GridFunction f(dims);
  if (value) {
    std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
    const int tail = static_cast<int>(dims.cells() & 63);
    if (tail != 0) f.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return f;
}

void GridFunction::set(std::int64_t x, std::int64_t y, bool v) {
  const std::uint64_t i = static_cast<std::uint64_t>(x + y * dims_.m);
  if (v)
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  else
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::int64_t GridFunction::popcount() const {
  std::int64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::size_t GridFunction::hash() const {
  // FNV-1a over the words plus the dims
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(dims_.m));
  mix(static_cast<std::uint64_t>(dims_.n));
  for (std::uint64_t w : words_) mix(w);
  return static_cast<std::size_t>(h);
}

bool segment_function_value(const OrientedSegment& seg, GridPoint x) {
  const int s = cross_sign(seg.a, seg.b, x);
  if (s != 0) return s > 0;
  const std::int64_t da = (x.x - seg.a.x) * (x.x - seg.a.x) + (x.y - seg.a.y) * (x.y - seg.a.y);
  const std::int64_t db = (x.x - seg.b.x) * (x.x - seg.b.x) + (x.y - seg.b.y) * (x.y - seg.b.y);
  // collinear ties would need the midpoint to be a lattice point, which a
  // prime segment's parity rules out
  assert(da != db);
  return da < db;
}

GridFunction threshold_from_segment(GridDims dims, const OrientedSegment& seg) {
  if (!dims.contains(seg.a) || !dims.contains(seg.b))
    throw std::invalid_argument("threshold_from_segment: endpoint outside grid");
  if (!is_prime_segment(seg.a, seg.b))
    throw std::invalid_argument("threshold_from_segment: segment is not prime");
  GridFunction f(dims);
  for (std::int64_t y = 0; y < dims.n; ++y)
    for (std::int64_t x = 0; x < dims.m; ++x)
      if (segment_function_value(seg, GridPoint{x, y})) f.set(x, y, true);
  return f;
}

namespace {

// Monotone-chain hull; returns vertices in CCW order, no interior
// collinear points. Sizes 0/1/2 come back as-is.
std::vector<GridPoint> convex_hull(std::vector<GridPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<GridPoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross_sign(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross_sign(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool on_closed_segment(GridPoint p, GridPoint a, GridPoint b) {
  if (cross_sign(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool point_in_hull(GridPoint p, const std::vector<GridPoint>& hull) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) return on_closed_segment(p, hull[0], hull[1]);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (cross_sign(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  }
  return true;
}

bool segments_intersect(GridPoint p1, GridPoint p2, GridPoint q1, GridPoint q2) {
  const int d1 = cross_sign(q1, q2, p1);
  const int d2 = cross_sign(q1, q2, p2);
  const int d3 = cross_sign(p1, p2, q1);
  const int d4 = cross_sign(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_closed_segment(p1, q1, q2)) return true;
  if (d2 == 0 && on_closed_segment(p2, q1, q2)) return true;
  if (d3 == 0 && on_closed_segment(q1, p1, p2)) return true;
  if (d4 == 0 && on_closed_segment(q2, p1, p2)) return true;
  return false;
}

bool hulls_intersect(const std::vector<GridPoint>& h0, const std::vector<GridPoint>& h1) {
  if (h0.empty() || h1.empty()) return false;
  for (const GridPoint& p : h0)
    if (point_in_hull(p, h1)) return true;
  for (const GridPoint& p : h1)
    if (point_in_hull(p, h0)) return true;
  if (h0.size() < 2 || h1.size() < 2) return false;
  const std::size_t e0 = h0.size() == 2 ? 1 : h0.size();
  const std::size_t e1 = h1.size() == 2 ? 1 : h1.size();
  for (std::size_t i = 0; i < e0; ++i)
    for (std::size_t j = 0; j < e1; ++j)
      if (segments_intersect(h0[i], h0[(i + 1) % h0.size()], h1[j],
                             h1[(j + 1) % h1.size()]))
        return true;
  return false;
}

}  // namespace

bool is_threshold(const GridFunction& f) {
  const GridDims d = f.dims();
  std::vector<GridPoint> m0, m1;
  for (std::int64_t y = 0; y < d.n; ++y)
    for (std::int64_t x = 0; x < d.m; ++x)
      (f.test(x, y) ? m1 : m0).push_back(GridPoint{x, y});
  if (m0.empty() || m1.empty()) return true;
  return !hulls_intersect(convex_hull(std::move(m0)), convex_hull(std::move(m1)));
}

std::vector<OrientedSegment> oriented_prime_segments(GridDims dims) {
  std::vector<OrientedSegment> out;
  for (std::int64_t ay = 0; ay < dims.n; ++ay)
    for (std::int64_t ax = 0; ax < dims.m; ++ax)
      for (std::int64_t by = 0; by < dims.n; ++by)
        for (std::int64_t bx = 0; bx < dims.m; ++bx) {
          const GridPoint a{ax, ay}, b{bx, by};
          if (a == b) continue;
          if (std::gcd(std::abs(ax - bx), std::abs(ay - by)) == 1)
            out.emplace_back(a, b);
        }
  return out;
}

std::int64_t count_oriented_prime_segments(GridDims dims) {
  // Each primitive difference vector (dx,dy) admits (m-|dx|)(n-|dy|)
  // placements; ordered endpoint pairs = oriented segments.
  std::int64_t total = 0;
  for (std::int64_t dx = -(dims.m - 1); dx <= dims.m - 1; ++dx)
    for (std::int64_t dy = -(dims.n - 1); dy <= dims.n - 1; ++dy) {
      if (dx == 0 && dy == 0) continue;
      if (std::gcd(std::abs(dx), std::abs(dy)) != 1) continue;
      total += (dims.m - std::abs(dx)) * (dims.n - std::abs(dy));
    }
  return total;
}

std::vector<GridFunction> enumerate_threshold(GridDims dims) {
  if (dims.cells() > kEnumThresholdMaxCells)
    throw resource_limit_error("enumerate_threshold: grid exceeds enumeration guard");
  const std::vector<OrientedSegment> segs = oriented_prime_segments(dims);
  const std::int64_t n = static_cast<std::int64_t>(segs.size());
  std::vector<GridFunction> out;
  out.reserve(segs.size() + 2);
  out.assign(segs.size(), GridFunction(dims));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = threshold_from_segment(dims, segs[i]);
  out.push_back(GridFunction::constant(dims, false));
  out.push_back(GridFunction::constant(dims, true));
  // sort + unique keeps the result deterministic regardless of thread count
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t count_threshold(GridDims dims) {
  return count_oriented_prime_segments(dims) + 2;
}

GridFunction& GridFunction::operator&=(const GridFunction& g) {
  if (!(dims_ == g.dims_)) throw std::invalid_argument("conjunction: dims mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= g.words_[i];
  return *this;
}

GridFunction conjunction(const GridFunction& f, const GridFunction& g) {
  GridFunction out = f;
  out &= g;
  return out;
}

bool has_boundary_true(const GridFunction& f) {
  const GridDims d = f.dims();
  for (std::int64_t x = 0; x < d.m; ++x)
    if (f.test(x, 0) || f.test(x, d.n - 1)) return true;
  for (std::int64_t y = 0; y < d.n; ++y)
    if (f.test(0, y) || f.test(d.m - 1, y)) return true;
  return false;
}

}  // namespace gridthresh
