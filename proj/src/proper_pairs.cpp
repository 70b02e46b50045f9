#include "gridthresh/proper_pairs.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gridthresh/errors.hpp"

namespace gridthresh {

SegmentPair::SegmentPair(OrientedSegment x, OrientedSegment y) : s1(x), s2(y) {
  if (s2 < s1) std::swap(s1, s2);
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Nested: return "nested";
    case PairClass::Touching: return "touching";
    case PairClass::ConvexQuad: return "convex_quad";
    case PairClass::NotProper: return "not_proper";
  }
  return "?";
}

namespace {

inline bool on_closed_segment(GridPoint p, GridPoint a, GridPoint b) {
  if (cross_sign(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool on_open_segment(GridPoint p, GridPoint a, GridPoint b) {
  return p != a && p != b && on_closed_segment(p, a, b);
}

inline bool proper_values(const OrientedSegment& s1, const OrientedSegment& s2) {
  return segment_function_value(s2, s1.a) && segment_function_value(s2, s1.b) &&
         segment_function_value(s1, s2.a) && segment_function_value(s1, s2.b);
}

}  // namespace

bool is_proper_pair(GridDims dims, const SegmentPair& p) {
  for (const GridPoint& pt : {p.s1.a, p.s1.b, p.s2.a, p.s2.b})
    if (!dims.contains(pt))
      throw std::invalid_argument("is_proper_pair: endpoint outside grid");
  if (!is_prime_segment(p.s1.a, p.s1.b) || !is_prime_segment(p.s2.a, p.s2.b))
    throw std::invalid_argument("is_proper_pair: segment is not prime");
  return proper_values(p.s1, p.s2);
}

PairClass classify_pair_geometric(const SegmentPair& p) {
  const GridPoint a = p.s1.a, b = p.s1.b, c = p.s2.a, d = p.s2.b;
  // Heads' segment strictly inside the tails' segment. Equality of the two
  // point sets (only possible as a==d, c==b) is the reversed pair, which
  // is never proper.
  if (on_closed_segment(a, b, d) && on_closed_segment(c, b, d) &&
      !(a == d && c == b)) {
    return PairClass::Nested;
  }
  if ((on_open_segment(a, b, d) && cross_sign(c, d, b) > 0) ||
      (on_open_segment(c, b, d) && cross_sign(a, b, d) > 0)) {
    return PairClass::Touching;
  }
  if (cross_sign(a, b, c) > 0 && cross_sign(b, c, d) > 0 &&
      cross_sign(c, d, a) > 0 && cross_sign(d, a, b) > 0) {
    return PairClass::ConvexQuad;
  }
  return PairClass::NotProper;
}

std::int64_t count_proper_pairs(GridDims dims) {
  if (dims.cells() > kProperPairMaxCells)
    throw resource_limit_error("count_proper_pairs: grid exceeds enumeration guard");
  const std::vector<OrientedSegment> segs = oriented_prime_segments(dims);
  const std::int64_t n = static_cast<std::int64_t>(segs.size());
  std::int64_t count = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : count)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (proper_values(segs[i], segs[j])) ++count;
    }
  }
  return count;
}

std::int64_t count_proper_pairs_serial(GridDims dims) {
  if (dims.cells() > kProperPairMaxCells)
    throw resource_limit_error("count_proper_pairs_serial: grid exceeds enumeration guard");
  const std::vector<OrientedSegment> segs = oriented_prime_segments(dims);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (proper_values(segs[i], segs[j])) ++count;
  return count;
}

namespace {

std::vector<Segment> nonoriented_prime_segments(GridDims dims) {
  std::vector<Segment> out;
  for (std::int64_t ay = 0; ay < dims.n; ++ay)
    for (std::int64_t ax = 0; ax < dims.m; ++ax)
      for (std::int64_t by = ay; by < dims.n; ++by)
        for (std::int64_t bx = (by == ay ? ax + 1 : 0); bx < dims.m; ++bx) {
          const GridPoint a{ax, ay}, b{bx, by};
          if (std::gcd(std::abs(ax - bx), std::abs(ay - by)) == 1)
            out.emplace_back(a, b);
        }
  return out;
}

}  // namespace

std::int64_t count_convex_position_pairs(GridDims dims) {
  if (dims.cells() > kConvexPairMaxCells)
    throw resource_limit_error("count_convex_position_pairs: grid exceeds enumeration guard");
  const std::vector<Segment> segs = nonoriented_prime_segments(dims);
  const std::int64_t n = static_cast<std::int64_t>(segs.size());
  std::int64_t count = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : count)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j)
      if (in_convex_position(segs[i], segs[j])) ++count;
  return count;
}

std::int64_t count_convex_quad_proper_pairs(GridDims dims) {
  if (dims.cells() > kProperPairMaxCells)
    throw resource_limit_error("count_convex_quad_proper_pairs: grid exceeds enumeration guard");
  const std::vector<OrientedSegment> segs = oriented_prime_segments(dims);
  const std::int64_t n = static_cast<std::int64_t>(segs.size());
  std::int64_t count = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : count)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j)
      if (classify_pair_geometric(SegmentPair(segs[i], segs[j])) == PairClass::ConvexQuad)
        ++count;
  return count;
}

// ---------------------------------------------------------------------------
// t2 enumeration. Functions fit 3 words under the guard; the pair loop runs
// parallel over the outer index with conjunctions deduplicated in sharded
// open-address sets.
// ---------------------------------------------------------------------------

namespace {

constexpr int kT2Words = (kTwoThresholdMaxCells + 63) / 64;  // = 3
using T2Key = std::array<std::uint64_t, kT2Words>;

inline std::uint64_t key_hash(const T2Key& k) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : k) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  return h;
}

class ShardedKeySet {
 public:
  explicit ShardedKeySet(int shards) : shards_(static_cast<std::size_t>(shards)) {
    for (auto& s : shards_) {
      s.slots.resize(kInitialCap);
      s.used.assign(kInitialCap, 0);
    }
  }

  void insert(const T2Key& k) {
    const std::uint64_t h = key_hash(k);
    Shard& s = shards_[h & (shards_.size() - 1)];
    std::lock_guard<std::mutex> lock(s.mu);
    insert_into(s, k, h);
  }

  std::int64_t size() const {
    std::int64_t n = 0;
    for (const auto& s : shards_) n += s.count;
    return n;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& s : shards_)
      for (std::size_t i = 0; i < s.slots.size(); ++i)
        if (s.used[i]) f(s.slots[i]);
  }

 private:
  static constexpr std::size_t kInitialCap = 1024;

  struct Shard {
    std::mutex mu;
    std::vector<T2Key> slots;
    std::vector<std::uint8_t> used;
    std::int64_t count = 0;
  };

  static void insert_into(Shard& s, const T2Key& k, std::uint64_t h) {
    const std::size_t mask = s.slots.size() - 1;
    std::size_t i = (h >> 8) & mask;
    while (s.used[i]) {
      if (s.slots[i] == k) return;
      i = (i + 1) & mask;
    }
    s.slots[i] = k;
    s.used[i] = 1;
    ++s.count;
    if (static_cast<std::size_t>(s.count) * 3 > s.slots.size() * 2) grow(s);
  }

  static void grow(Shard& s) {
    std::vector<T2Key> old_slots = std::move(s.slots);
    std::vector<std::uint8_t> old_used = std::move(s.used);
    const std::size_t cap = old_slots.size() * 2;
    s.slots.assign(cap, T2Key{});
    s.used.assign(cap, 0);
    const std::size_t mask = cap - 1;
    for (std::size_t i = 0; i < old_slots.size(); ++i) {
      if (!old_used[i]) continue;
      std::size_t j = (key_hash(old_slots[i]) >> 8) & mask;
      while (s.used[j]) j = (j + 1) & mask;
      s.slots[j] = old_slots[i];
      s.used[j] = 1;
    }
  }

  std::vector<Shard> shards_;
};

std::vector<T2Key> threshold_keys(const std::vector<GridFunction>& fs) {
  std::vector<T2Key> keys(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    T2Key k{};
    const auto w = fs[i].words();
    std::copy(w.begin(), w.end(), k.begin());
    keys[i] = k;
  }
  return keys;
}

ShardedKeySet dedup_conjunctions(GridDims dims) {
  const std::vector<T2Key> keys = threshold_keys(enumerate_threshold(dims));
  const std::int64_t n = static_cast<std::int64_t>(keys.size());
  ShardedKeySet set(64);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i; j < n; ++j) {
      T2Key k;
      for (int w = 0; w < kT2Words; ++w) k[w] = keys[i][w] & keys[j][w];
      set.insert(k);
    }
  }
  return set;
}

}  // namespace

std::int64_t count_two_threshold(GridDims dims) {
  if (dims.cells() > kTwoThresholdMaxCells)
    throw resource_limit_error("count_two_threshold: grid exceeds enumeration guard");
  return dedup_conjunctions(dims).size();
}

std::int64_t count_two_threshold_serial(GridDims dims) {
  if (dims.cells() > kTwoThresholdMaxCells)
    throw resource_limit_error("count_two_threshold_serial: grid exceeds enumeration guard");
  const std::vector<GridFunction> ts = enumerate_threshold(dims);
  std::set<std::vector<std::uint64_t>> seen;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i; j < ts.size(); ++j) {
      const GridFunction f = conjunction(ts[i], ts[j]);
      seen.emplace(f.words().begin(), f.words().end());
    }
  return static_cast<std::int64_t>(seen.size());
}

std::vector<GridFunction> enumerate_two_threshold(GridDims dims) {
  if (dims.cells() > kTwoThresholdMaxCells)
    throw resource_limit_error("enumerate_two_threshold: grid exceeds enumeration guard");
  const ShardedKeySet set = dedup_conjunctions(dims);
  std::vector<T2Key> keys;
  keys.reserve(static_cast<std::size_t>(set.size()));
  set.for_each([&keys](const T2Key& k) { keys.push_back(k); });
  std::sort(keys.begin(), keys.end());
  std::vector<GridFunction> out;
  out.reserve(keys.size());
  for (const T2Key& k : keys) {
    GridFunction f(dims);
    for (std::int64_t y = 0; y < dims.n; ++y)
      for (std::int64_t x = 0; x < dims.m; ++x) {
        const std::uint64_t bit = static_cast<std::uint64_t>(x + y * dims.m);
        if ((k[bit >> 6] >> (bit & 63)) & 1u) f.set(x, y, true);
      }
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

UniquenessReport verify_uniqueness(GridDims dims) {
  UniquenessReport r;
  const std::vector<OrientedSegment> segs = oriented_prime_segments(dims);
  std::unordered_map<GridFunction, std::int64_t, GridFunctionHash> preimages;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (!proper_values(segs[i], segs[j])) continue;
      ++r.proper_pairs;
      GridFunction f = threshold_from_segment(dims, segs[i]);
      f &= threshold_from_segment(dims, segs[j]);
      ++preimages[std::move(f)];
    }
  }
  r.defined_functions = static_cast<std::int64_t>(preimages.size());
  for (const auto& [f, count] : preimages) {
    ++r.functions_by_preimage[count];
    if (is_threshold(f)) ++r.violations;  // a proper pair must define a proper 2-threshold fn
    if (has_boundary_true(f)) {
      ++r.boundary_true_functions;
      if (count != 1) ++r.violations;
    } else if (count != 1) {
      ++r.multi_preimage_no_boundary;
    }
  }
  // Zero-preimage check: every non-threshold conjunction with a boundary
  // true point must be defined by exactly one proper pair.
  const std::vector<GridFunction> t2 = enumerate_two_threshold(dims);
  for (const GridFunction& f : t2) {
    if (is_threshold(f) || !has_boundary_true(f)) continue;
    auto it = preimages.find(f);
    if (it == preimages.end()) ++r.violations;
  }
  return r;
}

DecompositionReport verify_decomposition(GridDims dims) {
  DecompositionReport r;
  const std::vector<GridFunction> t2 = enumerate_two_threshold(dims);
  r.t2 = static_cast<std::int64_t>(t2.size());
  r.t = static_cast<std::int64_t>(enumerate_threshold(dims).size());
  for (const GridFunction& f : t2) {
    if (is_threshold(f)) continue;
    if (has_boundary_true(f))
      ++r.proper2t_boundary;
    else
      ++r.proper2t_no_boundary;
  }
  const std::vector<OrientedSegment> segs = oriented_prime_segments(dims);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (!proper_values(segs[i], segs[j])) continue;
      ++r.q;
      GridFunction f = threshold_from_segment(dims, segs[i]);
      f &= threshold_from_segment(dims, segs[j]);
      if (!has_boundary_true(f)) ++r.pairs_no_boundary;
    }
  }
  r.identity_t2 = (r.t2 == r.t + r.proper2t_no_boundary + r.proper2t_boundary);
  r.identity_q = (r.q == r.pairs_no_boundary + r.proper2t_boundary);
  r.q_off_by_factor_two =
      !r.identity_q && (r.q == 2 * (r.pairs_no_boundary + r.proper2t_boundary));
  return r;
}

DistanceReport verify_distance_claim(GridDims dims) {
  DistanceReport r;
  const std::vector<OrientedSegment> segs = oriented_prime_segments(dims);
  const std::int64_t n = static_cast<std::int64_t>(segs.size());
  std::int64_t checked = 0, violations = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : checked, violations)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (!proper_values(segs[i], segs[j])) continue;
      GridFunction f = threshold_from_segment(dims, segs[i]);
      f &= threshold_from_segment(dims, segs[j]);
      if (has_boundary_true(f)) continue;
      ++checked;
      // d(P, ell(CD)) <= 1  <=>  cross(C,D,P)^2 <= |D-C|^2, checked for
      // both labelings of the pair.
      const OrientedSegment& s1 = segs[i];
      const OrientedSegment& s2 = segs[j];
      auto dist_ok = [](const OrientedSegment& seg, GridPoint p) {
        const std::int64_t cr = cross(seg.a, seg.b, p);
        const std::int64_t dx = seg.b.x - seg.a.x, dy = seg.b.y - seg.a.y;
        return cr * cr <= dx * dx + dy * dy;
      };
      if (!dist_ok(s2, s1.a) || !dist_ok(s2, s1.b) || !dist_ok(s1, s2.a) ||
          !dist_ok(s1, s2.b))
        ++violations;
    }
  }
  r.pairs_checked = checked;
  r.violations = violations;
  return r;
}

}  // namespace gridthresh
