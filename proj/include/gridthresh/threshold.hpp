#ifndef GRIDTHRESH_THRESHOLD_HPP
#define GRIDTHRESH_THRESHOLD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gridthresh/geometry.hpp"

namespace gridthresh {

inline constexpr std::int64_t kGridMaxCells = std::int64_t{1} << 30;
inline constexpr std::int64_t kEnumThresholdMaxCells = 4096;

struct GridDims {
  std::int64_t m = 1;  // width,  x in 0..m-1
  std::int64_t n = 1;  // height, y in 0..n-1

  GridDims() = default;
  GridDims(std::int64_t m_, std::int64_t n_);

  std::int64_t cells() const { return m * n; }
  bool contains(GridPoint p) const {
    return p.x >= 0 && p.x < m && p.y >= 0 && p.y < n;
  }
  bool on_boundary(GridPoint p) const {
    return p.x == 0 || p.x == m - 1 || p.y == 0 || p.y == n - 1;
  }
  friend bool operator==(const GridDims&, const GridDims&) = default;
  friend auto operator<=>(const GridDims&, const GridDims&) = default;
};

// {0,1}-valued function on the grid, bit index x + y*m.
class GridFunction {
 public:
  explicit GridFunction(GridDims dims);
  static GridFunction constant(GridDims dims, bool value);

  GridDims dims() const { return dims_; }
  bool test(std::int64_t x, std::int64_t y) const {
    const std::uint64_t i = static_cast<std::uint64_t>(x + y * dims_.m);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::int64_t x, std::int64_t y, bool v);
  std::int64_t popcount() const;
  std::span<const std::uint64_t> words() const { return words_; }
  GridFunction& operator&=(const GridFunction& g);

  friend bool operator==(const GridFunction&, const GridFunction&) = default;
  friend auto operator<=>(const GridFunction&, const GridFunction&) = default;

  std::size_t hash() const;

 private:
  GridDims dims_;
  std::vector<std::uint64_t> words_;
};

struct GridFunctionHash {
  std::size_t operator()(const GridFunction& f) const { return f.hash(); }
};

// Value at a single point of the function an oriented prime segment
// defines: head and its open half-plane are 1, collinear points are 1
// exactly when strictly closer to the head (squared distances; ties are 0).
bool segment_function_value(const OrientedSegment& seg, GridPoint x);

// Fills the whole grid. Throws for a non-prime segment or an endpoint
// outside the grid.
GridFunction threshold_from_segment(GridDims dims, const OrientedSegment& seg);

// Exact separability: Conv(M0) and Conv(M1) disjoint. Constant functions
// are threshold.
bool is_threshold(const GridFunction& f);

// All oriented prime segments with both endpoints in the grid, in a
// deterministic order.
std::vector<OrientedSegment> oriented_prime_segments(GridDims dims);

// Number of such segments via the placement sum over primitive difference
// vectors; no enumeration guard.
std::int64_t count_oriented_prime_segments(GridDims dims);

// Deduplicated set {f_seg} plus the two constants, sorted. Cardinality is
// t(m,n). Guarded by kEnumThresholdMaxCells.
std::vector<GridFunction> enumerate_threshold(GridDims dims);

// t(m,n) = #oriented prime segments + 2, usable beyond the guard.
std::int64_t count_threshold(GridDims dims);

GridFunction conjunction(const GridFunction& f, const GridFunction& g);

// True iff some true point lies on the grid boundary.
bool has_boundary_true(const GridFunction& f);

}  // namespace gridthresh

#endif
