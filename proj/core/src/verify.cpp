#include "gridtree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "gridtree/error.hpp"

namespace gridtree {

std::string_view check_name(Check c) {
  switch (c) {
    case Check::Injective: return "injective";
    case Check::Bounds: return "bounds";
    case Check::Planar: return "planar";
    case Check::Upward: return "upward";
    case Check::WeaklyUpward: return "weakly_upward";
    case Check::Rotation: return "rotation";
    case Check::EdgeThroughVertex: return "edge_through_vertex";
    case Check::Occupancy: return "occupancy";
  }
  return "?";
}

Check parse_check_name(std::string_view name) {
  for (Check c : {Check::Injective, Check::Bounds, Check::Planar, Check::Upward,
                  Check::WeaklyUpward, Check::Rotation, Check::EdgeThroughVertex,
                  Check::Occupancy}) {
    if (check_name(c) == name) return c;
  }
  throw PreconditionError("unknown check '" + std::string(name) + "'");
}

CheckSet parse_check_list(std::string_view list) {
  CheckSet out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    if (!item.empty()) out.insert(parse_check_name(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

CheckSet default_checks() {
  return {Check::Injective, Check::Bounds, Check::Planar, Check::EdgeThroughVertex};
}

namespace {

// Below this many nodes linear scans beat hashing.
constexpr std::size_t kSmallTree = 48;

std::string point_str(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string edge_str(const RootedOrderedTree& t, NodeId child) {
  return std::to_string(t.parent(child)) + "-" + std::to_string(child);
}

struct EdgeList {
  std::vector<NodeId> child;  // edge i joins parent(child[i]) and child[i]
  std::vector<LatticePoint> a;
  std::vector<LatticePoint> b;
};

EdgeList collect_edges(const RootedOrderedTree& t, const GridEmbedding& e) {
  EdgeList edges;
  for (NodeId v = 0; v < t.size(); ++v) {
    if (t.parent(v) == kNoNode) continue;
    edges.child.push_back(v);
    edges.a.push_back(e.at(t.parent(v)));
    edges.b.push_back(e.at(v));
  }
  return edges;
}

bool edges_conflict(const EdgeList& edges, std::size_t i, std::size_t j) {
  if (edges.a[i] == edges.b[i] || edges.a[j] == edges.b[j]) return true;
  return segments_conflict(Segment(edges.a[i], edges.b[i]), Segment(edges.a[j], edges.b[j]));
}

std::optional<std::pair<std::size_t, std::size_t>> naive_conflict(const EdgeList& edges) {
  const std::size_t m = edges.child.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (edges_conflict(edges, i, j)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

// Every conflicting pair shares a point, hence a bucket; the minimum over
// all buckets is therefore the same pair the naive scan finds first.
std::optional<std::pair<std::size_t, std::size_t>> bucketed_conflict(const EdgeList& edges) {
  const std::size_t m = edges.child.size();
  if (m < 2) return std::nullopt;
  std::int64_t lox = edges.a[0].x, hix = lox, loy = edges.a[0].y, hiy = loy;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& p : {edges.a[i], edges.b[i]}) {
      lox = std::min(lox, p.x), hix = std::max(hix, p.x);
      loy = std::min(loy, p.y), hiy = std::max(hiy, p.y);
    }
  }
  const double area = static_cast<double>(hix - lox + 1) * static_cast<double>(hiy - loy + 1);
  const auto cell = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(std::sqrt(area / static_cast<double>(m)))));
  const std::int64_t cols = (hix - lox) / cell + 1;
  const std::int64_t rows = (hiy - loy) / cell + 1;

  std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(cols * rows));
  for (std::size_t i = 0; i < m; ++i) {
    const auto x0 = (std::min(edges.a[i].x, edges.b[i].x) - lox) / cell;
    const auto x1 = (std::max(edges.a[i].x, edges.b[i].x) - lox) / cell;
    const auto y0 = (std::min(edges.a[i].y, edges.b[i].y) - loy) / cell;
    const auto y1 = (std::max(edges.a[i].y, edges.b[i].y) - loy) / cell;
    for (auto by = y0; by <= y1; ++by) {
      for (auto bx = x0; bx <= x1; ++bx) buckets[static_cast<std::size_t>(by * cols + bx)].push_back(i);
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& bucket : buckets) {
    for (std::size_t p = 0; p < bucket.size(); ++p) {
      const std::size_t i = bucket[p];
      if (best && i > best->first) break;
      for (std::size_t q = p + 1; q < bucket.size(); ++q) {
        const std::pair<std::size_t, std::size_t> cand{i, bucket[q]};
        if (best && cand >= *best) break;
        if (edges_conflict(edges, cand.first, cand.second)) {
          best = cand;
          break;
        }
      }
    }
  }
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> find_conflict(const EdgeList& edges,
                                                                 PlanarityMethod method,
                                                                 std::size_t threshold) {
  if (method == PlanarityMethod::Auto) {
    method = edges.child.size() > threshold ? PlanarityMethod::Bucketed : PlanarityMethod::Naive;
  }
  return method == PlanarityMethod::Naive ? naive_conflict(edges) : bucketed_conflict(edges);
}

// 0 for directions in (0, pi] measured counterclockwise from `base`, 1 for
// (pi, 2pi), 2 for the base direction itself.
int half_of(const LatticePoint& base, const LatticePoint& v) {
  const LatticePoint origin{0, 0};
  const int o = orientation(origin, base, v);
  if (o > 0) return 0;
  if (o < 0) return 1;
  const __int128 d = static_cast<__int128>(base.x) * v.x + static_cast<__int128>(base.y) * v.y;
  return d < 0 ? 0 : 2;
}

}  // namespace

bool ccw_order(const LatticePoint& center, const LatticePoint& first, const LatticePoint& second,
               const LatticePoint& third) {
  const LatticePoint base{first.x - center.x, first.y - center.y};
  const LatticePoint u{second.x - center.x, second.y - center.y};
  const LatticePoint v{third.x - center.x, third.y - center.y};
  const int hu = half_of(base, u);
  const int hv = half_of(base, v);
  if (hu == 2 || hv == 2) return false;
  if (hu != hv) return hu < hv;
  return orientation({0, 0}, u, v) > 0;
}

std::optional<std::pair<NodeId, NodeId>> first_edge_conflict(const RootedOrderedTree& t,
                                                             const GridEmbedding& e,
                                                             PlanarityMethod method) {
  const EdgeList edges = collect_edges(t, e);
  const auto hit = find_conflict(edges, method, 2000);
  if (!hit) return std::nullopt;
  return std::make_pair(edges.child[hit->first], edges.child[hit->second]);
}

VerifyReport verify(const RootedOrderedTree& t, const GridEmbedding& e, const GridDims& dims,
                    const CheckSet& checks, const VerifyOptions& options) {
  for (NodeId v = 0; v < t.size(); ++v) {
    if (!e.contains(v)) throw PreconditionError("missing position for node " + std::to_string(v));
  }
  VerifyReport report;
  if (t.empty()) {
    for (Check c : checks) report.add(std::string(check_name(c)), true);
    return report;
  }

  const GridEmbedding& placed = e;
  const bool small = t.size() <= kSmallTree;

  std::optional<EdgeList> edges;
  auto edge_list = [&]() -> const EdgeList& {
    if (!edges) edges = collect_edges(t, placed);
    return *edges;
  };

  for (Check c : checks) {
    const std::string name(check_name(c));
    switch (c) {
      case Check::Injective: {
        std::string detail;
        if (small) {
          for (NodeId v = 1; v < t.size() && detail.empty(); ++v) {
            for (NodeId u = 0; u < v; ++u) {
              if (placed.at(u) == placed.at(v)) {
                detail = "nodes " + std::to_string(u) + " and " + std::to_string(v) + " share " +
                         point_str(placed.at(v));
                break;
              }
            }
          }
          report.add(name, detail.empty(), detail);
          break;
        }
        std::unordered_map<LatticePoint, NodeId> owner;
        for (NodeId v = 0; v < t.size(); ++v) {
          const auto [it, inserted] = owner.emplace(placed.at(v), v);
          if (!inserted) {
            detail = "nodes " + std::to_string(it->second) + " and " + std::to_string(v) +
                     " share " + point_str(placed.at(v));
            break;
          }
        }
        report.add(name, detail.empty(), detail);
        break;
      }
      case Check::Bounds: {
        std::string detail;
        if (options.anchor) {
          const LatticePoint lo = *options.anchor;
          for (NodeId v = 0; v < t.size(); ++v) {
            const auto& p = placed.at(v);
            if (p.x < lo.x || p.y < lo.y || p.x >= lo.x + dims.width || p.y >= lo.y + dims.height) {
              detail = "node " + std::to_string(v) + " at " + point_str(p) + " outside grid";
              break;
            }
          }
        } else {
          std::int64_t lox = placed.at(0).x, hix = lox, loy = placed.at(0).y, hiy = loy;
          for (NodeId v = 1; v < t.size(); ++v) {
            const auto& p = placed.at(v);
            lox = std::min(lox, p.x), hix = std::max(hix, p.x);
            loy = std::min(loy, p.y), hiy = std::max(hiy, p.y);
          }
          const GridDims got{hix - lox + 1, hiy - loy + 1};
          if (got.width > dims.width || got.height > dims.height) {
            detail = "bounding box " + std::to_string(got.width) + "x" + std::to_string(got.height) +
                     " exceeds " + std::to_string(dims.width) + "x" + std::to_string(dims.height);
          }
        }
        report.add(name, detail.empty(), detail);
        break;
      }
      case Check::Planar: {
        const auto& el = edge_list();
        const auto hit = find_conflict(el, options.planarity, options.bucket_threshold);
        std::string detail;
        if (hit) {
          detail = "edges " + edge_str(t, el.child[hit->first]) + " and " +
                   edge_str(t, el.child[hit->second]) + " conflict";
        }
        report.add(name, !hit, detail);
        break;
      }
      case Check::Upward:
      case Check::WeaklyUpward: {
        std::string detail;
        for (NodeId v = 0; v < t.size(); ++v) {
          if (t.parent(v) == kNoNode) continue;
          const auto py = placed.at(t.parent(v)).y;
          const auto cy = placed.at(v).y;
          if (c == Check::Upward ? !(py > cy) : !(py >= cy)) {
            detail = "edge " + edge_str(t, v) + " goes from y=" + std::to_string(py) + " to y=" +
                     std::to_string(cy);
            break;
          }
        }
        report.add(name, detail.empty(), detail);
        break;
      }
      case Check::Rotation: {
        std::string detail;
        for (NodeId v = 0; v < t.size() && detail.empty(); ++v) {
          if (t.parent(v) == kNoNode || t.left(v) == kNoNode || t.right(v) == kNoNode) continue;
          if (!ccw_order(placed.at(v), placed.at(t.parent(v)), placed.at(t.left(v)),
                         placed.at(t.right(v)))) {
            detail = "node " + std::to_string(v) + " breaks (parent, left, right) order";
          }
        }
        report.add(name, detail.empty(), detail);
        break;
      }
      case Check::EdgeThroughVertex: {
        std::unordered_map<LatticePoint, NodeId> at_point;
        if (!small) {
          for (NodeId v = 0; v < t.size(); ++v) at_point.emplace(placed.at(v), v);
        }
        std::string detail;
        const auto& el = edge_list();
        for (std::size_t i = 0; i < el.child.size() && detail.empty(); ++i) {
          const auto& a = el.a[i];
          const auto& b = el.b[i];
          if (a == b) continue;
          const std::int64_t dx = b.x - a.x;
          const std::int64_t dy = b.y - a.y;
          const std::int64_t g = std::gcd(dx, dy);
          auto hit = [&](NodeId w) {
            detail = "edge " + edge_str(t, el.child[i]) + " passes through node " +
                     std::to_string(w) + " at " + point_str(placed.at(w));
          };
          if (!small && static_cast<std::uint64_t>(g) <= t.size()) {
            for (std::int64_t k = 1; k < g && detail.empty(); ++k) {
              const auto it = at_point.find({a.x + dx / g * k, a.y + dy / g * k});
              if (it != at_point.end()) hit(it->second);
            }
          } else {
            const Segment s(a, b);
            for (NodeId w = 0; w < t.size() && detail.empty(); ++w) {
              if (point_in_segment_interior(placed.at(w), s)) hit(w);
            }
          }
        }
        report.add(name, detail.empty(), detail);
        break;
      }
      case Check::Occupancy: {
        std::string detail;
        try {
          GridEmbedding own(t.size());
          for (NodeId v = 0; v < t.size(); ++v) own.set(v, placed.at(v));
          const auto unused = occupancy(own, dims, options.anchor);
          if (!unused.empty()) {
            detail = std::to_string(unused.size()) + " unused point(s), first " +
                     point_str(unused.front());
          }
        } catch (const PreconditionError& err) {
          detail = err.what();
        }
        report.add(name, detail.empty(), detail);
        break;
      }
    }
  }
  return report;
}

}  // namespace gridtree
