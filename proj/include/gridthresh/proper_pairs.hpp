#ifndef GRIDTHRESH_PROPER_PAIRS_HPP
#define GRIDTHRESH_PROPER_PAIRS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gridthresh/threshold.hpp"

namespace gridthresh {

inline constexpr std::int64_t kProperPairMaxCells = 256;
inline constexpr std::int64_t kConvexPairMaxCells = 1024;
inline constexpr std::int64_t kTwoThresholdMaxCells = 144;

// Unordered pair of oriented segments with one canonical representative:
// the lexicographically smaller segment first.
struct SegmentPair {
  OrientedSegment s1;
  OrientedSegment s2;

  SegmentPair(OrientedSegment x, OrientedSegment y);

  friend bool operator==(const SegmentPair&, const SegmentPair&) = default;
  friend auto operator<=>(const SegmentPair&, const SegmentPair&) = default;
};

enum class PairClass { Nested, Touching, ConvexQuad, NotProper };

const char* to_string(PairClass c);

// Value-based properness: all four cross function values are 1.
// Validates that endpoints lie in the grid and segments are prime.
bool is_proper_pair(GridDims dims, const SegmentPair& p);

// Geometric characterization. Nested: the heads' segment is a strict
// subset of the tails' segment (all four collinear; covers coinciding
// heads through a degenerate heads-segment). Touching: one head strictly
// inside the open tails' segment with the opposite triangle
// counterclockwise. ConvexQuad: head-tail-head-tail is a counterclockwise
// quadrilateral. Grid-independent; agrees with is_proper_pair on every
// in-grid pair.
PairClass classify_pair_geometric(const SegmentPair& p);

// q(m,n): unordered proper pairs over all in-grid oriented prime segments.
std::int64_t count_proper_pairs(GridDims dims);
std::int64_t count_proper_pairs_serial(GridDims dims);  // reference

// p(m,n): unordered pairs of non-oriented prime segments in convex position.
std::int64_t count_convex_position_pairs(GridDims dims);

// Count of proper pairs classified ConvexQuad (the other side of the
// bijection with p).
std::int64_t count_convex_quad_proper_pairs(GridDims dims);

// t2(m,n): distinct conjunctions of two threshold functions.
std::int64_t count_two_threshold(GridDims dims);
std::int64_t count_two_threshold_serial(GridDims dims);  // reference
std::vector<GridFunction> enumerate_two_threshold(GridDims dims);

struct UniquenessReport {
  std::int64_t proper_pairs = 0;
  std::int64_t defined_functions = 0;
  std::int64_t boundary_true_functions = 0;
  std::int64_t violations = 0;  // BT function with preimage != 1, or pair defining a threshold fn
  std::int64_t multi_preimage_no_boundary = 0;                // allowed, recorded
  std::map<std::int64_t, std::int64_t> functions_by_preimage; // multiplicity -> #functions
  bool passed() const { return violations == 0; }
};

UniquenessReport verify_uniqueness(GridDims dims);

struct DecompositionReport {
  std::int64_t t2 = 0;
  std::int64_t t = 0;
  std::int64_t proper2t_boundary = 0;     // t2'
  std::int64_t proper2t_no_boundary = 0;
  std::int64_t q = 0;
  std::int64_t pairs_no_boundary = 0;
  bool identity_t2 = false;  // t2 == t + proper2t_no_boundary + t2'
  bool identity_q = false;   // q  == pairs_no_boundary + t2'
  // Set when identity_q fails by exactly a factor of two, which is what an
  // ordered reading of "pair" would produce.
  bool q_off_by_factor_two = false;
  bool passed() const { return identity_t2 && identity_q; }
};

DecompositionReport verify_decomposition(GridDims dims);

struct DistanceReport {
  std::int64_t pairs_checked = 0;  // proper pairs defining a function with no boundary true point
  std::int64_t violations = 0;
  bool passed() const { return violations == 0; }
};

DistanceReport verify_distance_claim(GridDims dims);

}  // namespace gridthresh

#endif
