#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace gridtree {

/// A point of the integer lattice. Larger y is higher.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

/// A closed segment between two distinct lattice points.
class Segment {
 public:
  /// Throws PreconditionError when a == b.
  Segment(LatticePoint a, LatticePoint b);

  const LatticePoint& a() const { return a_; }
  const LatticePoint& b() const { return b_; }

 private:
  LatticePoint a_;
  LatticePoint b_;
};

/// Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
/// Exact for |coordinates| <= 2^61.
int orientation(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r);

/// True iff the closed segments share a point that is not an endpoint common
/// to both. Collinear overlap of positive length and T-junctions conflict.
bool segments_conflict(const Segment& s1, const Segment& s2);

/// True iff p lies on s strictly between its endpoints.
bool point_in_segment_interior(const LatticePoint& p, const Segment& s);

}  // namespace gridtree

template <>
struct std::hash<gridtree::LatticePoint> {
  std::size_t operator()(const gridtree::LatticePoint& p) const noexcept {
    const auto hx = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(hx ^ (static_cast<std::uint64_t>(p.y) + 0x632BE59BD9B4E019ULL +
                                          (hx << 6) + (hx >> 2)));
  }
};
