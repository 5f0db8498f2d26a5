#include "gridtree/perfect.hpp"

#include <algorithm>
#include <bit>

#include "gridtree/error.hpp"
#include "gridtree/verify.hpp"

namespace gridtree {

namespace {

// Drawing under construction, in local ids.
struct Shape {
  std::vector<LatticePoint> pos;
  std::vector<NodeId> left;
  std::vector<NodeId> right;
  NodeId root = kNoNode;

  NodeId add(LatticePoint p, NodeId l = kNoNode, NodeId r = kNoNode) {
    pos.push_back(p);
    left.push_back(l);
    right.push_back(r);
    return static_cast<NodeId>(pos.size() - 1);
  }

  // Copies `sub` through `tf`; returns the copy's root.
  NodeId append(const Shape& sub, const Transform& tf) {
    const auto offset = static_cast<NodeId>(pos.size());
    auto shift = [&](NodeId v) { return v == kNoNode ? kNoNode : v + offset; };
    for (std::size_t i = 0; i < sub.pos.size(); ++i) {
      add(tf.apply(sub.pos[i]), shift(sub.left[i]), shift(sub.right[i]));
    }
    return sub.root + offset;
  }
};

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

Shape base_shape() {
  Shape s;
  const NodeId l = s.add({1, 2});
  const NodeId r = s.add({2, 2});
  s.root = s.add({2, 1}, l, r);
  return s;
}

// Quadrant tables; h is the half side of the new tile.
Shape compose(TileKind kind, const Shape& f, const Shape& g, int k) {
  const std::int64_t h = pow2((k - 1) / 2);
  const std::int64_t q = pow2((k - 3) / 2);
  const Transform identity_tr{false, false, h, h, h};
  Transform top_left{false, false, 0, h, h};
  Transform bottom_left{false, false, 0, 0, h};
  const Transform bottom_right{false, true, h, 0, h};
  LatticePoint left_connector{};
  if (kind == TileKind::F) {
    top_left.mirror_x = true;
    bottom_left.mirror_x = true;
    left_connector = {q + 1, h + 1};
  } else {
    left_connector = {q, h + 1};
  }
  const LatticePoint right_connector{h + q, h + 1};

  Shape s;
  const NodeId tr = s.append(f, identity_tr);
  const NodeId tl = s.append(f, top_left);
  const NodeId br = s.append(g, bottom_right);
  const NodeId bl = s.append(g, bottom_left);
  const NodeId lc = s.add(left_connector, tl, bl);
  const NodeId rc = s.add(right_connector, tr, br);
  s.root = s.add({h + 1, h}, lc, rc);
  return s;
}

TileDrawing to_tile(TileKind kind, int k, const Shape& s) {
  TreeBuilder b;
  std::vector<NodeId> builder_id(s.pos.size(), kNoNode);
  std::vector<NodeId> stack{s.root};
  builder_id[s.root] = b.add_root();
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (s.left[v] != kNoNode) builder_id[s.left[v]] = b.add_child(builder_id[v], Side::Left);
    if (s.right[v] != kNoNode) builder_id[s.right[v]] = b.add_child(builder_id[v], Side::Right);
    if (s.right[v] != kNoNode) stack.push_back(s.right[v]);
    if (s.left[v] != kNoNode) stack.push_back(s.left[v]);
  }
  auto built = b.build();
  GridEmbedding e(s.pos.size());
  for (std::size_t i = 0; i < s.pos.size(); ++i) e.set(built.new_id[builder_id[i]], s.pos[i]);
  return {kind, k, tile_side(k), std::move(built.tree), std::move(e)};
}

void require_odd(int k) {
  if (k < 1 || k % 2 == 0) {
    throw PreconditionError("tile height k must be odd and >= 1, got " + std::to_string(k));
  }
}

}  // namespace

std::int64_t tile_side(int k) {
  require_odd(k);
  return pow2((k + 1) / 2);
}

LatticePoint tile_free_point(TileKind kind, int k) {
  require_odd(k);
  return kind == TileKind::F ? LatticePoint{pow2((k - 1) / 2), 1} : LatticePoint{1, 1};
}

LatticePoint tile_root_point(int k) {
  require_odd(k);
  const std::int64_t h = pow2((k - 1) / 2);
  return {h + 1, h};
}

TileDrawing build_tile(TileKind kind, int k, std::size_t node_cap) {
  require_odd(k);
  if (k >= 62 || (std::size_t{1} << (k + 1)) - 1 > node_cap) {
    throw ResourceError("tile of height " + std::to_string(k) + " exceeds the node cap");
  }
  Shape f = base_shape();
  Shape g = base_shape();
  for (int level = 3; level <= k; level += 2) {
    Shape next_f = compose(TileKind::F, f, g, level);
    Shape next_g = compose(TileKind::G, f, g, level);
    f = std::move(next_f);
    g = std::move(next_g);
  }
  return to_tile(kind, k, kind == TileKind::F ? f : g);
}

TreeDrawing embed_perfect(int k) {
  TileDrawing tile = build_tile(TileKind::F, k);
  return {std::move(tile.tree), std::move(tile.embedding)};
}

TreeDrawing embed_perfect_with_parent(int k) {
  const TileDrawing tile = build_tile(TileKind::F, k);
  const std::size_t n = tile.tree.size() + 1;
  std::vector<NodeId> left(n), right(n), parent(n);
  auto shift = [](NodeId v) { return v == kNoNode ? kNoNode : v + 1; };
  left[0] = shift(tile.tree.root());
  right[0] = kNoNode;
  parent[0] = kNoNode;
  GridEmbedding e(n);
  e.set(0, tile_free_point(TileKind::F, k));
  for (NodeId v = 0; v < tile.tree.size(); ++v) {
    left[v + 1] = shift(tile.tree.left(v));
    right[v + 1] = shift(tile.tree.right(v));
    parent[v + 1] = v == tile.tree.root() ? 0 : shift(tile.tree.parent(v));
    e.set(v + 1, tile.embedding.at(v));
  }
  RootedOrderedTree tree(0, std::move(left), std::move(right), std::move(parent));

  VerifyOptions opts;
  opts.anchor = LatticePoint{1, 1};
  const GridDims dims{tile.side, tile.side};
  const VerifyReport report =
      verify(tree, e, dims,
             {Check::Injective, Check::Bounds, Check::Planar, Check::EdgeThroughVertex,
              Check::Occupancy},
             opts);
  if (!report.ok()) {
    throw Error("internal: plus-parent drawing failed verification\n" + report.render());
  }
  return {std::move(tree), std::move(e)};
}

VerifyReport check_tile_properties(const TileDrawing& tile) {
  VerifyReport report;
  const int k = tile.k;
  const std::int64_t h = pow2((k - 1) / 2);
  const auto& t = tile.tree;
  const auto& e = tile.embedding;

  const LatticePoint want_root = tile_root_point(k);
  const bool root_ok = !t.empty() && e.contains(t.root()) && e.at(t.root()) == want_root;
  report.add("root_position", root_ok,
             root_ok ? "" : "root not at (" + std::to_string(want_root.x) + "," +
                                std::to_string(want_root.y) + ")");

  std::string strip_detail;
  for (NodeId v = 0; v < t.size() && strip_detail.empty(); ++v) {
    const NodeId p = t.parent(v);
    if (p == kNoNode || p == t.root()) continue;
    const auto xa = e.at(p).x;
    const auto xb = e.at(v).x;
    const bool left_side = xa <= h && xb <= h;
    const bool right_side = xa >= h + 1 && xb >= h + 1;
    if (!left_side && !right_side) {
      strip_detail = "edge " + std::to_string(p) + "-" + std::to_string(v) + " crosses the strip";
    }
  }
  report.add("central_strip", strip_detail.empty(), strip_detail);

  const LatticePoint want_free = tile_free_point(tile.kind, k);
  std::string free_detail;
  try {
    const auto unused = occupancy(e, {tile.side, tile.side}, LatticePoint{1, 1});
    if (unused.size() != 1 || unused.front() != want_free) {
      free_detail = std::to_string(unused.size()) + " unused point(s); expected exactly (" +
                    std::to_string(want_free.x) + "," + std::to_string(want_free.y) + ")";
    }
  } catch (const PreconditionError& err) {
    free_detail = err.what();
  }
  report.add("unused_point", free_detail.empty(), free_detail);

  VerifyOptions opts;
  opts.anchor = LatticePoint{1, 1};
  const VerifyReport base =
      verify(t, e, {tile.side, tile.side},
             {Check::Injective, Check::Bounds, Check::Planar, Check::EdgeThroughVertex}, opts);
  for (const auto& c : base.entries()) report.add(c.name, c.passed, c.detail);
  return report;
}

GridEmbedding hv_layout(const RootedOrderedTree& t) {
  if (!validate_binary(t).ok()) throw PreconditionError("hv_layout needs a valid binary tree");
  const auto order = t.preorder();
  const auto sizes = t.subtree_sizes();
  std::vector<std::int64_t> width(t.size(), 1), height(t.size(), 1);
  // below[v]: the child drawn one row down, beside[v]: the child to the right.
  std::vector<NodeId> below(t.size(), kNoNode), beside(t.size(), kNoNode);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    const NodeId l = t.left(v);
    const NodeId r = t.right(v);
    if (l != kNoNode && r != kNoNode) {
      const bool left_small = sizes[l] <= sizes[r];
      below[v] = left_small ? l : r;
      beside[v] = left_small ? r : l;
      width[v] = width[below[v]] + width[beside[v]];
      height[v] = std::max(height[below[v]] + 1, height[beside[v]]);
    } else if (l != kNoNode || r != kNoNode) {
      beside[v] = l != kNoNode ? l : r;
      width[v] = 1 + width[beside[v]];
      height[v] = height[beside[v]];
    }
  }

  GridEmbedding e(t.size());
  const std::int64_t top = height[t.root()] - 1;
  e.set(t.root(), {0, top});
  for (NodeId v : order) {
    const LatticePoint p = e.at(v);
    if (below[v] != kNoNode) {
      e.set(below[v], {p.x, p.y - 1});
      e.set(beside[v], {p.x + width[below[v]], p.y});
    } else if (beside[v] != kNoNode) {
      e.set(beside[v], {p.x + 1, p.y});
    }
  }
  return e;
}

std::int64_t hv_area_bound(std::size_t n) {
  if (n == 0) return 0;
  return static_cast<std::int64_t>(n) * (std::bit_width(n) - 1 + 1);
}

}  // namespace gridtree
