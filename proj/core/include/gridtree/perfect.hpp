#pragma once

#include <cstdint>
#include <utility>

#include "gridtree/embedding.hpp"
#include "gridtree/report.hpp"
#include "gridtree/tree.hpp"

namespace gridtree {

enum class TileKind { F, G };

/// Maps [1, side]^2 onto a quadrant of a larger grid: optional reflection
/// inside the small square, then translation.
struct Transform {
  bool mirror_x = false;
  bool mirror_y = false;
  std::int64_t dx = 0;
  std::int64_t dy = 0;
  std::int64_t side = 1;

  LatticePoint apply(const LatticePoint& p) const {
    return {(mirror_x ? side + 1 - p.x : p.x) + dx, (mirror_y ? side + 1 - p.y : p.y) + dy};
  }
};

/// Drawing of T_k in [1, side]^2, side = 2^{(k+1)/2}, 1-based coordinates.
///
/// Root at (h+1, h) with h = side/2. Only root edges cross the open strip
/// h < x < h+1. F leaves (h, 1) unused, G leaves (1, 1) unused.
struct TileDrawing {
  TileKind kind = TileKind::F;
  int k = 1;
  std::int64_t side = 2;
  RootedOrderedTree tree;
  GridEmbedding embedding;
};

std::int64_t tile_side(int k);
/// The point a tile of this kind leaves unused.
LatticePoint tile_free_point(TileKind kind, int k);
LatticePoint tile_root_point(int k);

/// Throws PreconditionError unless k is odd and >= 1, ResourceError past the
/// node cap.
TileDrawing build_tile(TileKind kind, int k, std::size_t node_cap = kDefaultNodeCap);

struct TreeDrawing {
  RootedOrderedTree tree;
  GridEmbedding embedding;
};

/// T_k on the side x side grid: the F tile.
TreeDrawing embed_perfect(int k);

/// T_k plus a parent of its root, filling every point of the side x side grid.
/// The parent sits at the F tile's free point; the drawing is re-verified
/// before returning.
TreeDrawing embed_perfect_with_parent(int k);

/// Root position, central strip, unused point, plus injective, bounds
/// (absolute, [1, side]^2), planar and edge_through_vertex.
VerifyReport check_tile_properties(const TileDrawing& tile);

/// Divide-and-conquer baseline: the smaller child subtree hangs one row below
/// its parent, the larger (or only) one is placed to the right of it. Height
/// is at most floor(log2 n) + 1 and width at most n, so the area is at most
/// n * (floor(log2 n) + 1). The lowest point is at y = 0, the root at x = 0.
GridEmbedding hv_layout(const RootedOrderedTree& t);

/// n * (floor(log2 n) + 1), the area bound hv_layout guarantees.
std::int64_t hv_area_bound(std::size_t n);

}  // namespace gridtree
