#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridtree/geometry.hpp"
#include "gridtree/tree.hpp"

namespace gridtree {

struct GridDims {
  std::int64_t width = 1;
  std::int64_t height = 1;

  friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// Partial map NodeId -> LatticePoint. Injectivity is checked by verify(),
/// not enforced here.
class GridEmbedding {
 public:
  GridEmbedding() = default;
  explicit GridEmbedding(std::size_t node_count) : pos_(node_count) {}

  /// Total embedding with node i at points[i].
  static GridEmbedding from_points(const std::vector<LatticePoint>& points);

  /// Number of node slots (placed or not).
  std::size_t size() const { return pos_.size(); }
  std::size_t placed_count() const;

  void set(NodeId v, LatticePoint p);
  void erase(NodeId v);
  bool contains(NodeId v) const { return v < pos_.size() && pos_[v].has_value(); }
  /// Throws PreconditionError when v has no position.
  const LatticePoint& at(NodeId v) const;

  /// True iff nodes 0..n-1 all have positions.
  bool is_total_on(std::size_t n) const;
  /// Positions of placed nodes in id order.
  std::vector<LatticePoint> points() const;

  GridEmbedding translated(std::int64_t dx, std::int64_t dy) const;

  friend bool operator==(const GridEmbedding&, const GridEmbedding&) = default;

 private:
  std::vector<std::optional<LatticePoint>> pos_;
};

/// Bounding-box width and height (max - min + 1 per axis) of the placed points.
GridDims dims_of(const GridEmbedding& e);

/// Lowest x and lowest y over the placed points.
LatticePoint min_corner(const GridEmbedding& e);

/// Points of the dims grid not used by any node, top row first, left to
/// right. The grid is anchored at `anchor` when given, else at min_corner(e).
/// Throws PreconditionError if the embedding does not fit.
std::vector<LatticePoint> occupancy(const GridEmbedding& e, const GridDims& dims,
                                    std::optional<LatticePoint> anchor = std::nullopt);

/// "embedding v1" header, then "<id> <x> <y>" per placed node, LF-terminated.
std::string write_embedding(const GridEmbedding& e);
GridEmbedding parse_embedding(std::string_view text);

}  // namespace gridtree
