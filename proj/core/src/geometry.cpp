#include "gridtree/geometry.hpp"

#include <algorithm>

#include "gridtree/error.hpp"

namespace gridtree {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : what + " at line " + std::to_string(line) + ", column " +
                            std::to_string(column)),
      line_(line),
      column_(column) {}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

Segment::Segment(LatticePoint a, LatticePoint b) : a_(a), b_(b) {
  if (a == b) {
    throw PreconditionError("degenerate segment");
  }
}

int orientation(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r) {
  const __int128 lhs = static_cast<__int128>(q.x - p.x) * (r.y - p.y);
  const __int128 rhs = static_cast<__int128>(q.y - p.y) * (r.x - p.x);
  return (lhs > rhs) - (lhs < rhs);
}

namespace {

// p is known to be collinear with [a, b].
bool within_box(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

__int128 dot(const LatticePoint& o, const LatticePoint& u, const LatticePoint& v) {
  return static_cast<__int128>(u.x - o.x) * (v.x - o.x) +
         static_cast<__int128>(u.y - o.y) * (v.y - o.y);
}

}  // namespace

bool segments_conflict(const Segment& s1, const Segment& s2) {
  const LatticePoint& a = s1.a();
  const LatticePoint& b = s1.b();
  const LatticePoint& c = s2.a();
  const LatticePoint& d = s2.b();

  // With a common endpoint the only other possible contact is a collinear
  // overlap leaving that endpoint in the same direction.
  const LatticePoint* shared = nullptr;
  const LatticePoint* other1 = nullptr;
  const LatticePoint* other2 = nullptr;
  if (a == c) {
    shared = &a, other1 = &b, other2 = &d;
  } else if (a == d) {
    shared = &a, other1 = &b, other2 = &c;
  } else if (b == c) {
    shared = &b, other1 = &a, other2 = &d;
  } else if (b == d) {
    shared = &b, other1 = &a, other2 = &c;
  }
  if (shared != nullptr) {
    return orientation(*shared, *other1, *other2) == 0 && dot(*shared, *other1, *other2) > 0;
  }

  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    return true;
  }
  return (o1 == 0 && within_box(c, a, b)) || (o2 == 0 && within_box(d, a, b)) ||
         (o3 == 0 && within_box(a, c, d)) || (o4 == 0 && within_box(b, c, d));
}

bool point_in_segment_interior(const LatticePoint& p, const Segment& s) {
  if (p == s.a() || p == s.b()) {
    return false;
  }
  return orientation(s.a(), s.b(), p) == 0 && within_box(p, s.a(), s.b());
}

}  // namespace gridtree
