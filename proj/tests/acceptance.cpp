// Acceptance gate. Prints one PASS/FAIL line per criterion.
//
//   gridtree_acceptance        run all criteria
//   gridtree_acceptance 3      run criterion 3 only
//
// Exit status is nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridtree/cnf.hpp"
#include "gridtree/perfect.hpp"
#include "gridtree/reduction.hpp"
#include "gridtree/solver.hpp"
#include "gridtree/verify.hpp"
#include "support.hpp"

using namespace gridtree;

namespace {

// Tolerances and budgets.
constexpr double kC1BudgetS = 10.0;
constexpr double kC2BudgetS = 10.0;
constexpr double kC3BudgetS = 60.0;
constexpr int kC3MinFormulas = 20;
constexpr double kC5BudgetS = 300.0;
constexpr double kC6BudgetS = 10.0;
constexpr double kC7Exponent = 2.0;
constexpr double kC7Tolerance = 0.3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Perfect trees, k odd in 1..11: size, square box, planarity with the
// all-pairs scan, edge_through_vertex, one unused point at (2^{(k-1)/2}, 1),
// root at (2^{(k-1)/2}+1, 2^{(k-1)/2}), plus the tile property report.
Outcome c1() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream bad;
  for (int k = 1; k <= 11; k += 2) {
    const std::int64_t side = std::int64_t{1} << ((k + 1) / 2);
    const std::int64_t half = side / 2;
    const auto d = embed_perfect(k);
    if (d.tree.size() != (std::size_t{2} << k) - 1) bad << " k=" << k << ":size";
    if (!(dims_of(d.embedding) == GridDims{side, side})) bad << " k=" << k << ":box";
    VerifyOptions vo;
    vo.planarity = PlanarityMethod::Naive;
    const auto rep = verify(d.tree, d.embedding, {side, side},
                            {Check::Injective, Check::Bounds, Check::Planar, Check::EdgeThroughVertex}, vo);
    if (!rep.ok()) bad << " k=" << k << ":verify";
    const auto unused = occupancy(d.embedding, {side, side}, LatticePoint{1, 1});
    if (unused != std::vector<LatticePoint>{{half, 1}}) bad << " k=" << k << ":unused";
    if (!(d.embedding.at(d.tree.root()) == LatticePoint{half + 1, half})) bad << " k=" << k << ":root";
    for (auto kind : {TileKind::F, TileKind::G}) {
      if (!check_tile_properties(build_tile(kind, k)).ok()) bad << " k=" << k << ":tile";
    }
  }
  const double s = seconds_since(start);
  if (s >= kC1BudgetS) bad << " time";
  return {bad.str().empty(), "k=1..11 odd, " + fmt(s) + " s" + bad.str()};
}

Outcome c2() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream bad;
  for (int k = 1; k <= 11; k += 2) {
    const std::int64_t side = std::int64_t{1} << ((k + 1) / 2);
    const auto d = embed_perfect_with_parent(k);
    if (d.tree.size() != (std::size_t{2} << k)) bad << " k=" << k << ":size";
    VerifyOptions vo;
    vo.anchor = LatticePoint{1, 1};
    vo.planarity = PlanarityMethod::Naive;
    const auto rep = verify(d.tree, d.embedding, {side, side},
                            {Check::Injective, Check::Bounds, Check::Planar, Check::EdgeThroughVertex,
                             Check::Occupancy},
                            vo);
    if (!rep.ok()) bad << " k=" << k << ":verify";
    if (!occupancy(d.embedding, {side, side}).empty()) bad << " k=" << k << ":occupancy";
  }
  const double s = seconds_since(start);
  if (s >= kC2BudgetS) bad << " time";
  return {bad.str().empty(), "k=1..11 odd, all 2^{k+1} points used, " + fmt(s) + " s" + bad.str()};
}

Outcome c3() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  int formulas = 0, satisfiable = 0, encodings = 0;
  std::ostringstream bad;
  const CheckSet checks{Check::Injective, Check::Bounds,   Check::Planar,
                        Check::Upward,    Check::Rotation, Check::EdgeThroughVertex};
  for (int trial = 0; trial < 36; ++trial) {
    const int n = 3 + trial % 3;
    const int m = 1 + (trial / 3) % 4;
    const auto f = testing::random_formula(n, m, rng);
    ++formulas;
    const auto model = brute_force_sat(f);
    if (!model) continue;
    ++satisfiable;
    const auto r = reduce(f);
    for (const auto& a : all_models(f)) {
      ++encodings;
      const auto e = encode_embedding(r, a);
      VerifyOptions vo;
      vo.anchor = LatticePoint{0, 0};
      if (!verify(r.tree, e, {r.w, r.h}, checks, vo).ok()) bad << " t" << trial << ":verify";
      // Every point of rows 0..5n+4m used.
      std::set<LatticePoint> used;
      for (NodeId v = 0; v < r.tree.size(); ++v) used.insert(e.at(v));
      for (std::int64_t y = 0; y <= 5 * n + 4 * m; ++y) {
        for (std::int64_t x = 0; x < r.w; ++x) {
          if (!used.count({x, y})) {
            bad << " t" << trial << ":hole";
            y = 5 * n + 4 * m + 1;
            break;
          }
        }
      }
      for (const auto& lit : r.literal_leaves) {
        const auto y = e.at(lit.leaf).y;
        const auto base = 4 * (m - lit.clause);
        if (y < base + 1 || y > base + 3) bad << " t" << trial << ":leaf";
      }
      const auto back = decode_assignment(r, e);
      if (!(back == a) || !satisfies(f, back)) bad << " t" << trial << ":decode";
    }
  }
  const double s = seconds_since(start);
  if (s >= kC3BudgetS) bad << " time";
  if (formulas < kC3MinFormulas) bad << " too-few-formulas";
  return {bad.str().empty(), std::to_string(formulas) + " formulas, " + std::to_string(satisfiable) +
                                 " satisfiable, " + std::to_string(encodings) + " encodings, " +
                                 fmt(s) + " s" + bad.str()};
}

// The printed formulas, checked literally against an independent walk.
Outcome c4() {
  std::mt19937_64 rng(7);
  int cases = 0, literal_ok = 0, corrected_ok = 0;
  std::ostringstream failing;
  for (int n = 3; n <= 6; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const auto r = reduce(testing::random_formula(n, m, rng));
      ++cases;
      // Walk from the root; below-top nodes are those outside the top tree,
      // subtree roots are below-top nodes whose parent is in the top tree.
      std::int64_t below = 0;
      std::size_t roots_found = 0;
      std::vector<NodeId> stack{r.tree.root()};
      while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        const bool top = r.tree.role(v).kind == RoleKind::TopTree;
        if (!top) {
          ++below;
          const NodeId p = r.tree.parent(v);
          if (p != kNoNode && r.tree.role(p).kind == RoleKind::TopTree) ++roots_found;
        }
        for (NodeId c : {r.tree.left(v), r.tree.right(v)}) {
          if (c != kNoNode) stack.push_back(c);
        }
      }
      const auto lg = [](std::int64_t v) {
        int l = 0;
        while ((std::int64_t{1} << l) < v) ++l;
        return l;
      };
      const std::int64_t w_lit = 4 * m + 4;
      const std::int64_t h_lit = lg(4 * m + 4) + 5 * n + 4 * m + 1;
      const std::int64_t count_lit = (5 * n + 4 * m + 1) * (4 * m + 4);
      const bool lit = r.w == w_lit && r.h == h_lit && below == count_lit &&
                       static_cast<std::int64_t>(roots_found) == w_lit;
      const std::int64_t w_cor = 4 * n + 4;
      const bool cor = r.w == w_cor && r.h == lg(w_cor) + 5 * n + 4 * m + 1 &&
                       below == (5 * n + 4 * m + 1) * w_cor &&
                       static_cast<std::int64_t>(roots_found) == w_cor;
      literal_ok += lit ? 1 : 0;
      corrected_ok += cor ? 1 : 0;
      if (!lit && failing.str().size() < 80) failing << " (" << n << "," << m << ")";
    }
  }
  std::string detail = "w=4m+4 formulas hold for " + std::to_string(literal_ok) + "/" +
                       std::to_string(cases) + " (n,m); w=4n+4 formulas hold for " +
                       std::to_string(corrected_ok) + "/" + std::to_string(cases);
  if (literal_ok != cases) detail += "; failing" + failing.str() + " ...";
  return {literal_ok == cases, detail};
}

SolveOptions mode(SolveMode m, bool rotation) {
  SolveOptions o;
  o.mode = m;
  o.respect_rotation = rotation;
  return o;
}

Outcome c5() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SolveOptions> modes{
      mode(SolveMode::Upward, false),       mode(SolveMode::Upward, true),
      mode(SolveMode::WeaklyUpward, false), mode(SolveMode::WeaklyUpward, true),
      mode(SolveMode::General, false),      mode(SolveMode::General, true)};
  std::size_t comparisons = 0, mismatches = 0;
  std::ostringstream first;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : testing::all_trees(n)) {
      for (std::int64_t w = 1; w <= 9; ++w) {
        for (std::int64_t h = 1; w * h <= 9; ++h) {
          const auto expected = oracle_enumerate(t, {w, h}, modes);
          for (std::size_t k = 0; k < modes.size(); ++k) {
            ++comparisons;
            if (count_embeddings(t, {w, h}, modes[k]) != expected[k]) {
              if (mismatches++ == 0) first << " first " << serialize_tree(t) << " " << w << "x" << h;
            }
          }
        }
      }
    }
  }
  const double s = seconds_since(start);
  std::string detail = std::to_string(comparisons) + " counts (6 mode combinations), " +
                       std::to_string(mismatches) + " mismatches, " + fmt(s) + " s" + first.str();
  if (s >= kC5BudgetS) detail += " time";
  return {mismatches == 0 && s < kC5BudgetS, detail};
}

Outcome c6() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<LatticePoint, LatticePoint>> segs;
  for (int a = 0; a < 25; ++a) {
    for (int b = a + 1; b < 25; ++b) segs.push_back({{a % 5, a / 5}, {b % 5, b / 5}});
  }
  std::size_t pairs = 0, disagree = 0;
  for (const auto& s1 : segs) {
    for (const auto& s2 : segs) {
      ++pairs;
      const bool got = segments_conflict(Segment(s1.first, s1.second), Segment(s2.first, s2.second));
      disagree += got != testing::rational_conflict(s1.first, s1.second, s2.first, s2.second) ? 1 : 0;
    }
  }
  const double s = seconds_since(start);
  return {disagree == 0 && s < kC6BudgetS,
          std::to_string(pairs) + " pairs, " + std::to_string(disagree) + " disagreements, " +
              fmt(s, 3) + " s"};
}

// Verify time on random x-monotone paths (always planar, so the all-pairs
// scan never stops early). Least-squares slope of log t against log k.
Outcome c7() {
  std::mt19937_64 rng(99);
  std::vector<double> xs, ys;
  std::ostringstream points;
  const CheckSet checks = default_checks();
  VerifyOptions vo;
  vo.planarity = PlanarityMethod::Naive;
  for (double lk = 2.0; lk <= 4.0 + 1e-9; lk += 0.25) {
    const auto k = static_cast<std::size_t>(std::llround(std::pow(10.0, lk)));
    TreeBuilder b;
    NodeId prev = b.add_root();
    for (std::size_t i = 1; i < k; ++i) prev = b.add_child(prev, Side::Left);
    const auto t = b.build().tree;
    std::uniform_int_distribution<std::int64_t> y(0, static_cast<std::int64_t>(k) - 1);
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < k; ++i) pts.push_back({static_cast<std::int64_t>(i), y(rng)});
    const auto e = GridEmbedding::from_points(pts);
    const GridDims dims{static_cast<std::int64_t>(k), static_cast<std::int64_t>(k)};
    // Best of several batches; each batch runs long enough to time reliably.
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      int iters = 0;
      const auto start = std::chrono::steady_clock::now();
      double s = 0.0;
      do {
        if (!verify(t, e, dims, checks, vo).ok()) return {false, "path drawing failed verify"};
        ++iters;
        s = seconds_since(start);
      } while (s < 0.05);
      best = std::min(best, s / iters);
    }
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log(best));
    points << " " << k << ":" << fmt(best * 1e3, 3) << "ms";
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i], sy += ys[i], sxx += xs[i] * xs[i], sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {std::abs(slope - kC7Exponent) <= kC7Tolerance,
          "exponent " + fmt(slope, 3) + " (target " + fmt(kC7Exponent, 1) + " +- " +
              fmt(kC7Tolerance, 1) + ");" + points.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 perfect-tree drawings", c1},    {"C2 full-grid variant", c2},
      {"C3 reduction forward direction", c3}, {"C4 dimension and count formulas", c4},
      {"C5 solver-oracle equivalence", c5}, {"C6 segment predicate soundness", c6},
      {"C7 verify quadratic scaling", c7}};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }
  bool all = true;
  for (int i : selected) {
    if (i < 1 || i > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", i);
      return 2;
    }
    const auto& [name, fn] = criteria[static_cast<std::size_t>(i - 1)];
    const Outcome o = fn();
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
