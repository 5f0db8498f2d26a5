#pragma once

// Independent reference implementations used by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gridtree/cnf.hpp"
#include "gridtree/geometry.hpp"
#include "gridtree/tree.hpp"

namespace gridtree::testing {

// Exact fraction with positive denominator; small coordinates only.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    const auto g = std::gcd(num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
};

// Segment conflict by solving a + t(b-a) = c + u(d-c) over the rationals.
// Two segments conflict when they share any point other than a common
// endpoint of both.
inline bool rational_conflict(LatticePoint a, LatticePoint b, LatticePoint c, LatticePoint d) {
  const std::int64_t rx = b.x - a.x, ry = b.y - a.y;
  const std::int64_t sx = d.x - c.x, sy = d.y - c.y;
  const std::int64_t qx = c.x - a.x, qy = c.y - a.y;
  const std::int64_t den = rx * sy - ry * sx;
  const Frac zero(0), one(1);
  if (den != 0) {
    const Frac t(qx * sy - qy * sx, den);
    const Frac u(qx * ry - qy * rx, den);
    if (t < zero || one < t || u < zero || one < u) return false;
    const bool t_end = t == zero || t == one;
    const bool u_end = u == zero || u == one;
    return !(t_end && u_end);
  }
  if (qx * ry - qy * rx != 0) return false;  // parallel, not collinear
  // Collinear: parameters of c and d along a->b.
  const std::int64_t rr = rx * rx + ry * ry;
  const Frac tc(qx * rx + qy * ry, rr);
  const Frac td((d.x - a.x) * rx + (d.y - a.y) * ry, rr);
  const Frac lo = std::max(zero, std::min(tc, td));
  const Frac hi = std::min(one, std::max(tc, td));
  if (hi < lo) return false;
  return lo < hi;  // a single shared point is a shared endpoint here
}

// Every ordered binary tree shape with n nodes, as tree text.
inline std::vector<std::string> all_shapes(int n) {
  std::vector<std::vector<std::string>> memo(static_cast<std::size_t>(n + 1));
  memo[0] = {"."};
  for (int k = 1; k <= n; ++k) {
    for (int l = 0; l < k; ++l) {
      for (const auto& a : memo[static_cast<std::size_t>(l)]) {
        for (const auto& b : memo[static_cast<std::size_t>(k - 1 - l)]) {
          memo[static_cast<std::size_t>(k)].push_back("(x " + a + " " + b + ")");
        }
      }
    }
  }
  return memo[static_cast<std::size_t>(n)];
}

inline std::vector<RootedOrderedTree> all_trees(int n) {
  std::vector<RootedOrderedTree> out;
  for (auto s : all_shapes(n)) {
    int id = 0;
    for (auto pos = s.find('x'); pos != std::string::npos; pos = s.find('x', pos)) {
      s.replace(pos, 1, std::to_string(id++));
    }
    out.push_back(parse_tree(s));
  }
  return out;
}

// Random binary tree: each new node takes a uniformly chosen free slot.
inline RootedOrderedTree random_tree(std::size_t n, std::mt19937_64& rng) {
  TreeBuilder b;
  if (n == 0) return {};
  std::vector<std::pair<NodeId, Side>> slots;
  const NodeId r = b.add_root();
  slots = {{r, Side::Left}, {r, Side::Right}};
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    const std::size_t k = pick(rng);
    const auto [p, side] = slots[k];
    slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(k));
    const NodeId v = b.add_child(p, side);
    slots.push_back({v, Side::Left});
    slots.push_back({v, Side::Right});
  }
  return b.build().tree;
}

// Random 3-CNF with distinct variables per clause.
inline CnfFormula random_formula(int n, int m, std::mt19937_64& rng) {
  std::vector<std::vector<int>> clauses;
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  for (int j = 0; j < m; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<int> c;
    for (int k = 0; k < 3; ++k) c.push_back(rng() % 2 == 0 ? vars[k] : -vars[k]);
    clauses.push_back(c);
  }
  return make_formula(n, clauses);
}

// Node count of a tree by explicit walk from the root.
inline std::size_t count_reachable(const RootedOrderedTree& t) {
  if (t.empty()) return 0;
  std::size_t count = 0;
  std::vector<NodeId> stack{t.root()};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    ++count;
    for (NodeId c : {t.left(v), t.right(v)}) {
      if (c != kNoNode) stack.push_back(c);
    }
  }
  return count;
}

}  // namespace gridtree::testing
