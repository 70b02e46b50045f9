#include "gridthresh/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gridthresh {

bool in_coord_range(GridPoint p) {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit &&
         p.y <= kCoordLimit;
}

Orientation orientation(GridPoint a, GridPoint b, GridPoint c) {
  if (!in_coord_range(a) || !in_coord_range(b) || !in_coord_range(c))
    throw std::invalid_argument("orientation: coordinate outside GridPoint bounds");
  const int s = cross_sign(a, b, c);
  if (s > 0) return Orientation::Counterclockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

bool is_prime_segment(GridPoint a, GridPoint b) {
  if (a == b) throw std::invalid_argument("is_prime_segment: endpoints coincide");
  return std::gcd(std::abs(a.x - b.x), std::abs(a.y - b.y)) == 1;
}

OrientedSegment::OrientedSegment(GridPoint head, GridPoint tail) : a(head), b(tail) {
  if (a == b) throw std::invalid_argument("OrientedSegment: endpoints coincide");
}

Segment::Segment(GridPoint a, GridPoint b) : p(a), q(b) {
  if (p == q) throw std::invalid_argument("Segment: endpoints coincide");
  if (q < p) std::swap(p, q);
}

LatticeTriangle::LatticeTriangle(GridPoint a_, GridPoint b_, GridPoint c_)
    : a(a_), b(b_), c(c_) {
  if (cross_sign(a, b, c) == 0)
    throw std::invalid_argument("LatticeTriangle: vertices are collinear");
}

Rect bounding_rect(std::span<const GridPoint> points) {
  if (points.empty()) throw std::invalid_argument("bounding_rect: empty input");
  std::int64_t xmin = points[0].x, xmax = points[0].x;
  std::int64_t ymin = points[0].y, ymax = points[0].y;
  for (const GridPoint& p : points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return Rect{GridPoint{xmin, ymin}, xmax - xmin, ymax - ymin};
}

bool in_convex_position(const Segment& s1, const Segment& s2) {
  const GridPoint a = s1.p, b = s1.q, c = s2.p, d = s2.q;
  if (a == c || a == d || b == c || b == d) return false;
  // ell(s1) must miss s2 entirely: both of c,d strictly on one side.
  const int s_c = cross_sign(a, b, c);
  const int s_d = cross_sign(a, b, d);
  if (s_c == 0 || s_c != s_d) return false;
  const int s_a = cross_sign(c, d, a);
  const int s_b = cross_sign(c, d, b);
  if (s_a == 0 || s_a != s_b) return false;
  return true;
}

bool orientation_equivalence_check(GridPoint a, GridPoint b, GridPoint c, GridPoint d) {
  // General position: abc, abd, cda, cdb are all genuine triangles.
  const int abc = cross_sign(a, b, c);
  const int abd = cross_sign(a, b, d);
  const int cda = cross_sign(c, d, a);
  const int cdb = cross_sign(c, d, b);
  if (abc == 0 || abd == 0 || cda == 0 || cdb == 0) return false;
  return abc == abd && cda == cdb;
}

int corner_count(const Segment& s1, const Segment& s2, const Rect& r) {
  const GridPoint pts[4] = {s1.p, s1.q, s2.p, s2.q};
  if (r.degenerate())
    throw std::invalid_argument("corner_count: degenerate rectangle");
  if (bounding_rect(pts) != r)
    throw std::invalid_argument("corner_count: rect is not the bounding rectangle");
  const std::int64_t x0 = r.origin.x, x1 = r.origin.x + r.width;
  const std::int64_t y0 = r.origin.y, y1 = r.origin.y + r.height;
  int count = 0;
  for (const GridPoint& p : pts) {
    const bool corner_x = (p.x == x0 || p.x == x1);
    const bool corner_y = (p.y == y0 || p.y == y1);
    if (corner_x && corner_y) ++count;
  }
  return count;
}

std::int64_t prime_points_in_triangle_direct(const LatticeTriangle& t, GridPoint apex) {
  if (apex != t.a && apex != t.b && apex != t.c)
    throw std::invalid_argument("prime_points_in_triangle_direct: apex is not a vertex");
  const GridPoint pts[3] = {t.a, t.b, t.c};
  const Rect box = bounding_rect(pts);
  const int want = cross_sign(t.a, t.b, t.c);
  std::int64_t count = 0;
  for (std::int64_t y = box.origin.y; y <= box.origin.y + box.height; ++y) {
    for (std::int64_t x = box.origin.x; x <= box.origin.x + box.width; ++x) {
      const GridPoint p{x, y};
      if (p == apex) continue;
      const int s1 = cross_sign(t.a, t.b, p);
      const int s2 = cross_sign(t.b, t.c, p);
      const int s3 = cross_sign(t.c, t.a, p);
      // closed triangle: each edge sign matches the triangle's or is zero
      if ((s1 == want || s1 == 0) && (s2 == want || s2 == 0) && (s3 == want || s3 == 0)) {
        if (std::gcd(std::abs(p.x - apex.x), std::abs(p.y - apex.y)) == 1) ++count;
      }
    }
  }
  return count;
}

namespace {

// floor/ceil of n/d for d > 0
inline std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

inline std::int64_t ceil_div(std::int64_t n, std::int64_t d) {
  return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

inline std::int64_t ceil_div128(__int128 n, __int128 d) {
  return static_cast<std::int64_t>(n >= 0 ? (n + d - 1) / d : -((-n) / d));
}

inline std::int64_t floor_div128(__int128 n, __int128 d) {
  return static_cast<std::int64_t>(n >= 0 ? n / d : -((-n + d - 1) / d));
}

}  // namespace

std::int64_t lattice_points_in_scaled_triangle(GridPoint p, GridPoint q, std::int64_t h) {
  if (h < 1) throw std::invalid_argument("lattice_points_in_scaled_triangle: h >= 1");
  if (cross_sign(GridPoint{0, 0}, p, q) == 0)
    throw std::invalid_argument("lattice_points_in_scaled_triangle: degenerate triangle");

  // Half-plane form of the closed triangle (0,0),p,q: for each edge (v,w)
  // the constraint a*X + b*Y + c >= 0 is oriented toward the third vertex.
  // Membership of h*(x,y) is then tested in pure integer arithmetic.
  const GridPoint verts[3] = {GridPoint{0, 0}, p, q};
  struct HalfPlane {
    std::int64_t a, b, c;
  };
  HalfPlane hp[3];
  for (int e = 0; e < 3; ++e) {
    const GridPoint v = verts[e], w = verts[(e + 1) % 3], o = verts[(e + 2) % 3];
    std::int64_t a = -(w.y - v.y);
    std::int64_t b = (w.x - v.x);
    std::int64_t c = -(a * v.x + b * v.y);
    if (a * o.x + b * o.y + c < 0) {
      a = -a;
      b = -b;
      c = -c;
    }
    hp[e] = HalfPlane{a, b, c};
  }

  const std::int64_t ymin = std::min({std::int64_t{0}, p.y, q.y});
  const std::int64_t ymax = std::max({std::int64_t{0}, p.y, q.y});
  const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t count = 0;
  for (std::int64_t y = ceil_div(ymin, h); y <= floor_div(ymax, h); ++y) {
    const __int128 hy = static_cast<__int128>(h) * y;
    std::int64_t lo = -kInf, hi = kInf;
    bool empty = false;
    for (const HalfPlane& cst : hp) {
      // a*(h*x) >= -(b*h*y + c)
      const __int128 rhs = -(static_cast<__int128>(cst.b) * hy + cst.c);
      if (cst.a == 0) {
        if (rhs > 0) {
          empty = true;
          break;
        }
        continue;
      }
      const __int128 ah = static_cast<__int128>(cst.a) * h;
      if (ah > 0)
        lo = std::max(lo, ceil_div128(rhs, ah));
      else
        hi = std::min(hi, floor_div128(-rhs, -ah));
    }
    if (empty || hi < lo) continue;
    count += hi - lo + 1;
    if (y == 0 && lo <= 0 && 0 <= hi) --count;  // the apex is never counted
  }
  return count;
}

std::int64_t prime_points_in_triangle_mobius(const LatticeTriangle& t, GridPoint apex,
                                             const ArithTables& tables) {
  if (apex != t.a && apex != t.b && apex != t.c)
    throw std::invalid_argument("prime_points_in_triangle_mobius: apex is not a vertex");
  // Anchor the apex at the origin.
  GridPoint p, q;
  if (apex == t.a) {
    p = GridPoint{t.b.x - t.a.x, t.b.y - t.a.y};
    q = GridPoint{t.c.x - t.a.x, t.c.y - t.a.y};
  } else if (apex == t.b) {
    p = GridPoint{t.a.x - t.b.x, t.a.y - t.b.y};
    q = GridPoint{t.c.x - t.b.x, t.c.y - t.b.y};
  } else {
    p = GridPoint{t.a.x - t.c.x, t.a.y - t.c.y};
    q = GridPoint{t.b.x - t.c.x, t.b.y - t.c.y};
  }
  const GridPoint pts[3] = {GridPoint{0, 0}, p, q};
  const Rect box = bounding_rect(pts);
  const std::int64_t reach = box.width + box.height;
  if (tables.limit < reach)
    throw std::invalid_argument("prime_points_in_triangle_mobius: tables too small");
  std::int64_t sum = 0;
  for (std::int64_t h = 1; h <= reach; ++h) {
    const int mu = tables.mu[static_cast<std::size_t>(h)];
    if (mu == 0) continue;
    sum += mu * lattice_points_in_scaled_triangle(p, q, h);
  }
  return sum;
}

}  // namespace gridthresh
