#include <gtest/gtest.h>

#include <vector>

#include "gridtree/geometry.hpp"
#include "support.hpp"

namespace gridtree {
namespace {

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {2, 0}), 0);
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {1, 1}), 1);
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {1, -1}), -1);
}

TEST(Orientation, LargeCoordinatesDoNotOverflow) {
  const std::int64_t big = std::int64_t{1} << 40;
  // Cross product is big*(big+2) - (big+1)^2 = -1.
  EXPECT_EQ(orientation({0, 0}, {big, big + 1}, {big + 1, big + 2}), -1);
  EXPECT_EQ(orientation({-big, -big}, {0, 0}, {big, big}), 0);
}

TEST(SegmentsConflict, Examples) {
  EXPECT_TRUE(segments_conflict(Segment({0, 0}, {2, 2}), Segment({0, 2}, {2, 0})));
  EXPECT_FALSE(segments_conflict(Segment({0, 0}, {1, 1}), Segment({1, 1}, {2, 0})));
  EXPECT_TRUE(segments_conflict(Segment({0, 0}, {2, 0}), Segment({1, 0}, {3, 0})));
}

TEST(SegmentsConflict, TJunctionAndCollinearTouch) {
  EXPECT_TRUE(segments_conflict(Segment({0, 0}, {2, 0}), Segment({1, 0}, {1, 3})));
  EXPECT_FALSE(segments_conflict(Segment({0, 0}, {1, 0}), Segment({1, 0}, {2, 0})));
  EXPECT_TRUE(segments_conflict(Segment({0, 0}, {2, 0}), Segment({0, 0}, {1, 0})));
  EXPECT_TRUE(segments_conflict(Segment({0, 0}, {2, 0}), Segment({2, 0}, {0, 0})));
  EXPECT_FALSE(segments_conflict(Segment({0, 0}, {2, 0}), Segment({0, 1}, {2, 1})));
}

TEST(SegmentTest, DegenerateRejected) { EXPECT_ANY_THROW(Segment({1, 1}, {1, 1})); }

TEST(PointInInterior, Examples) {
  EXPECT_TRUE(point_in_segment_interior({1, 1}, Segment({0, 0}, {2, 2})));
  EXPECT_FALSE(point_in_segment_interior({0, 0}, Segment({0, 0}, {2, 2})));
  EXPECT_FALSE(point_in_segment_interior({1, 0}, Segment({0, 0}, {2, 2})));
  EXPECT_FALSE(point_in_segment_interior({3, 3}, Segment({0, 0}, {2, 2})));
}

std::vector<LatticePoint> small_grid(int side) {
  std::vector<LatticePoint> pts;
  for (int x = 0; x < side; ++x) {
    for (int y = 0; y < side; ++y) pts.push_back({x, y});
  }
  return pts;
}

TEST(SegmentsConflict, SymmetricAndOrientationFree) {
  const auto pts = small_grid(4);
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (a == b) continue;
      for (const auto& c : pts) {
        for (const auto& d : pts) {
          if (c == d) continue;
          const bool r = segments_conflict(Segment(a, b), Segment(c, d));
          ASSERT_EQ(r, segments_conflict(Segment(c, d), Segment(a, b)));
          ASSERT_EQ(r, segments_conflict(Segment(b, a), Segment(c, d)));
          ASSERT_EQ(r, segments_conflict(Segment(a, b), Segment(d, c)));
        }
      }
    }
  }
}

TEST(SegmentsConflict, TranslationInvariant) {
  const auto pts = small_grid(3);
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (a == b) continue;
      for (const auto& c : pts) {
        for (const auto& d : pts) {
          if (c == d) continue;
          auto sh = [](LatticePoint p) { return LatticePoint{p.x - 7, p.y + 1000003}; };
          ASSERT_EQ(segments_conflict(Segment(a, b), Segment(c, d)),
                    segments_conflict(Segment(sh(a), sh(b)), Segment(sh(c), sh(d))));
        }
      }
    }
  }
}

TEST(PointInInterior, MatchesDotProductOracle) {
  // Collinear and strictly between the endpoints, by dot product.
  const auto pts = small_grid(5);
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (a == b) continue;
      for (const auto& p : pts) {
        const bool on_line = (b.x - a.x) * (p.y - a.y) == (b.y - a.y) * (p.x - a.x);
        const std::int64_t t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
        const std::int64_t len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        const bool inside = on_line && t > 0 && t < len;
        ASSERT_EQ(point_in_segment_interior(p, Segment(a, b)), inside);
      }
    }
  }
}

TEST(LatticePointTest, OrderingAndHash) {
  EXPECT_LT((LatticePoint{0, 5}), (LatticePoint{1, 0}));
  EXPECT_EQ(std::hash<LatticePoint>{}({3, 4}), std::hash<LatticePoint>{}({3, 4}));
}

}  // namespace
}  // namespace gridtree
