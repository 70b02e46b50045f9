#ifndef GRIDTHRESH_GEOMETRY_HPP
#define GRIDTHRESH_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gridthresh/numtheory.hpp"

namespace gridthresh {

// Coordinates are capped so every 2x2 cross-product determinant fits a
// signed 64-bit integer with ample margin.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 20;

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

bool in_coord_range(GridPoint p);

enum class Orientation { Clockwise = -1, Collinear = 0, Counterclockwise = 1 };

// Unchecked cross product (b-a) x (c-a). Callers must keep coordinates
// within kCoordLimit; orientation() below enforces it.
inline std::int64_t cross(GridPoint a, GridPoint b, GridPoint c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline int cross_sign(GridPoint a, GridPoint b, GridPoint c) {
  const std::int64_t d = cross(a, b, c);
  return (d > 0) - (d < 0);
}

// Exact orientation predicate; throws std::invalid_argument when a
// coordinate is outside [-kCoordLimit, kCoordLimit].
Orientation orientation(GridPoint a, GridPoint b, GridPoint c);

// True iff gcd(|ax-bx|, |ay-by|) = 1. Throws for a == b.
bool is_prime_segment(GridPoint a, GridPoint b);

// Oriented prime segment: a is the head (true side), b the tail.
struct OrientedSegment {
  GridPoint a;
  GridPoint b;

  OrientedSegment(GridPoint head, GridPoint tail);

  friend bool operator==(const OrientedSegment&, const OrientedSegment&) = default;
  friend auto operator<=>(const OrientedSegment&, const OrientedSegment&) = default;
};

// Non-oriented segment; endpoints stored in lexicographic order.
struct Segment {
  GridPoint p;
  GridPoint q;

  Segment(GridPoint a, GridPoint b);

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

struct LatticeTriangle {
  GridPoint a;
  GridPoint b;
  GridPoint c;

  LatticeTriangle(GridPoint a, GridPoint b, GridPoint c);  // rejects collinear
};

// Axis-parallel rectangle [origin.x, origin.x+width] x [origin.y, origin.y+height].
struct Rect {
  GridPoint origin;
  std::int64_t width = 0;
  std::int64_t height = 0;

  bool degenerate() const { return width == 0 || height == 0; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Smallest axis-parallel rectangle containing all points. Throws on an
// empty input; a single point yields a degenerate 0x0 rectangle.
Rect bounding_rect(std::span<const GridPoint> points);

// True iff the four endpoints are distinct and each segment's supporting
// line misses the other segment, i.e. the segments are opposite sides of
// a convex quadrilateral.
bool in_convex_position(const Segment& s1, const Segment& s2);

// Same predicate expressed through triangle orientations: a,b,c,d in
// general position, abd oriented like abc, cda oriented like cdb.
bool orientation_equivalence_check(GridPoint a, GridPoint b, GridPoint c, GridPoint d);

// Number of endpoints of the two segments that coincide with corners of r.
// Precondition: r equals the bounding rectangle of the four endpoints and
// is non-degenerate; violations throw std::invalid_argument.
int corner_count(const Segment& s1, const Segment& s2, const Rect& r);

// #{integer X in the closed triangle, X != apex, apex-X prime}, by direct
// enumeration of the bounding box. apex must be a vertex.
std::int64_t prime_points_in_triangle_direct(const LatticeTriangle& t, GridPoint apex);

// Same count via Mobius inversion over scaled copies of the triangle.
// The apex is excluded from every scaled lattice count; with it included
// the inversion would pick up a spurious Mertens-sum term at the origin.
// Requires tables.limit >= width+height of the triangle's bounding box.
std::int64_t prime_points_in_triangle_mobius(const LatticeTriangle& t, GridPoint apex,
                                             const ArithTables& tables);

// Lattice points (x,y), excluding the origin, with h*(x,y) inside the
// closed triangle (0,0),p,q. Exact integer row sweep; exposed for tests.
std::int64_t lattice_points_in_scaled_triangle(GridPoint p, GridPoint q, std::int64_t h);

}  // namespace gridthresh

#endif
