#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gridtree/error.hpp"
#include "gridtree/reduction.hpp"
#include "gridtree/verify.hpp"
#include "support.hpp"

namespace gridtree {
namespace {

const CheckSet kDrawingChecks{Check::Injective, Check::Bounds,   Check::Planar,
                              Check::Upward,    Check::Rotation, Check::EdgeThroughVertex};

VerifyReport check_drawing(const ReductionOutput& r, const GridEmbedding& e) {
  VerifyOptions opts;
  opts.anchor = LatticePoint{0, 0};
  return verify(r.tree, e, {r.w, r.h}, kDrawingChecks, opts);
}

// Number of cells of rows 0..R not used by the drawing.
std::size_t holes_below_top(const ReductionOutput& r, const GridEmbedding& e) {
  std::set<LatticePoint> used;
  for (NodeId v = 0; v < r.tree.size(); ++v) used.insert(e.at(v));
  std::size_t holes = 0;
  for (std::int64_t y = 0; y <= r.subtree_row; ++y) {
    for (std::int64_t x = 0; x < r.w; ++x) holes += used.count({x, y}) ? 0 : 1;
  }
  return holes;
}

TEST(ReductionFormulas, Dimensions) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_EQ(ceil_log2(9), 4);
  EXPECT_EQ(ceil_log2(20), 5);
  // n = m: the two width readings coincide.
  EXPECT_EQ(reduction_width(4, 4), 20);
  EXPECT_EQ(reduction_height(4, 4), 42);
  EXPECT_EQ(reduction_below_top_count(4, 4), (5 * 4 + 4 * 4 + 1) * 20);
  // n = 3, m = 1: sixteen subtree roots need sixteen columns.
  EXPECT_EQ(reduction_width(3, 1), 16);
  EXPECT_EQ(reduction_height(3, 1), 4 + 15 + 4 + 1);
  EXPECT_EQ(reduction_below_top_count(3, 1), 320);
}

TEST(Reduce, StructureCounts) {
  std::mt19937_64 rng(4);
  for (int n = 3; n <= 6; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const auto f = testing::random_formula(n, m, rng);
      const auto r = reduce(f);
      EXPECT_TRUE(validate_binary(r.tree).ok());
      EXPECT_EQ(r.w, reduction_width(n, m));
      EXPECT_EQ(r.h, reduction_height(n, m));
      EXPECT_EQ(r.subtree_roots.size(), static_cast<std::size_t>(4 * n + 4));
      EXPECT_EQ(testing::count_reachable(r.tree), r.tree.size());
      EXPECT_EQ(static_cast<std::int64_t>(r.tree.size() - r.top_tree_size()),
                reduction_below_top_count(n, m));
      const auto depth = r.tree.depths();
      for (NodeId s : r.subtree_roots) EXPECT_EQ(depth[s], static_cast<std::size_t>(r.top_levels));
      EXPECT_EQ(r.literal_leaves.size(), static_cast<std::size_t>(3 * m));
    }
  }
}

TEST(Reduce, LiteralParentIndex) {
  EXPECT_EQ(literal_parent_index(3, 1, 1), 15);
  EXPECT_EQ(literal_parent_index(3, 3, 2), 9);
  EXPECT_EQ(literal_parent_index(3, 3, 2, -1), 8);
}

TEST(Encode, SingleClauseAllTrue) {
  const auto f = make_formula(3, {{1, 2, 3}});
  const auto r = reduce(f);
  const auto e = encode_embedding(r, parse_assignment("1,1,1"));
  const auto report = check_drawing(r, e);
  EXPECT_TRUE(report.ok()) << report.render();
  EXPECT_EQ(r.subtree_row, 19);
  EXPECT_EQ(holes_below_top(r, e), 0u);
  EXPECT_THROW(encode_embedding(r, parse_assignment("0,0,0")), PreconditionError);
  EXPECT_THROW(encode_embedding(r, parse_assignment("1,1")), PreconditionError);
}

TEST(Encode, SubtreeRootsOnOneRow) {
  const auto f = make_formula(3, {{1, -2, 3}, {-1, 2, 3}});
  const auto r = reduce(f);
  const auto e = encode_embedding(r, parse_assignment("1,0,1"));
  for (std::size_t s = 0; s < r.subtree_roots.size(); ++s) {
    EXPECT_EQ(e.at(r.subtree_roots[s]), (LatticePoint{static_cast<std::int64_t>(s), r.subtree_row}));
  }
  EXPECT_EQ(e.at(r.tree.root()).y, r.h - 1);
}

TEST(Encode, EverySatisfyingAssignmentOfRandomFormulas) {
  std::mt19937_64 rng(8);
  int encoded = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 3;
    const int m = 1 + trial % 4;
    const auto f = testing::random_formula(n, m, rng);
    const auto r = reduce(f);
    for (const auto& a : all_models(f)) {
      const auto e = encode_embedding(r, a);
      const auto report = check_drawing(r, e);
      ASSERT_TRUE(report.ok()) << write_dimacs(f) << format_assignment(a) << "\n" << report.render();
      ASSERT_EQ(holes_below_top(r, e), 0u);
      for (const auto& lit : r.literal_leaves) {
        const auto y = e.at(lit.leaf).y;
        const auto base = 4 * (m - lit.clause);
        ASSERT_GE(y, base + 1);
        ASSERT_LE(y, base + 3);
      }
      ASSERT_EQ(decode_assignment(r, e), a);
      ++encoded;
    }
  }
  EXPECT_GT(encoded, 20);
}

TEST(Encode, OnlyZeroOffsetWorks) {
  const auto f = make_formula(3, {{1, 2, 3}, {-1, -2, 3}});
  for (int delta : {-1, 1}) {
    const auto r = reduce(f, delta);
    bool any = false;
    for (const auto& a : all_models(f)) {
      try {
        const auto e = encode_embedding(r, a);
        any = any || check_drawing(r, e).ok();
      } catch (const Error&) {
      }
    }
    EXPECT_FALSE(any) << "delta " << delta;
  }
}

TEST(Decode, DirectRule) {
  const auto f = make_formula(3, {{1, 2, 3}});
  const auto r = reduce(f);
  GridEmbedding e(r.tree.size());
  for (int i = 0; i < 3; ++i) {
    e.set(r.pt_roots[i], {0, 10});
    e.set(r.pf_roots[i], {1, i == 1 ? 11 : 9});
  }
  EXPECT_EQ(format_assignment(decode_assignment(r, e)), "1,0,1");
  e.set(r.pf_roots[0], {1, 10});
  EXPECT_THROW(decode_assignment(r, e), PreconditionError);
}

TEST(Meta, RoundTrip) {
  const auto f = make_formula(4, {{1, -2, 3}, {-1, 2, 4}, {2, 3, -4}});
  const auto r = reduce(f);
  const auto text = write_meta(r);
  const auto back = read_meta(text);
  EXPECT_EQ(back.formula, r.formula);
  EXPECT_TRUE(back.tree.same_structure(r.tree));
  EXPECT_EQ(back.pt_roots, r.pt_roots);
  EXPECT_EQ(write_meta(back), text);
}

TEST(Meta, Errors) {
  const auto r = reduce(make_formula(3, {{1, 2, 3}}));
  auto text = write_meta(r);
  const auto at = text.find("pt 1 ");
  ASSERT_NE(at, std::string::npos);
  text.insert(at + 5, "9");
  EXPECT_THROW(read_meta(text), ParseError);
  EXPECT_THROW(read_meta("dims 1 1\nbogus 3\n"), ParseError);
}

}  // namespace
}  // namespace gridtree
