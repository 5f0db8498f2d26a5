#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <utility>

#include "gridtree/embedding.hpp"
#include "gridtree/report.hpp"
#include "gridtree/tree.hpp"

namespace gridtree {

enum class Check {
  Injective,
  Bounds,
  Planar,
  Upward,
  WeaklyUpward,
  Rotation,
  EdgeThroughVertex,
  Occupancy,
};

using CheckSet = std::set<Check>;

std::string_view check_name(Check c);
/// Throws PreconditionError on unknown names.
Check parse_check_name(std::string_view name);
/// Comma-separated names, e.g. "planar,upward".
CheckSet parse_check_list(std::string_view list);

/// injective, bounds, planar, edge_through_vertex.
CheckSet default_checks();

enum class PlanarityMethod {
  Auto,      // naive up to bucket_threshold edges, bucketed above
  Naive,     // all pairs
  Bucketed,  // uniform-grid buckets
};

struct VerifyOptions {
  /// When set, bounds and occupancy use the grid with this lower-left corner
  /// instead of the embedding's own bounding box.
  std::optional<LatticePoint> anchor;
  PlanarityMethod planarity = PlanarityMethod::Auto;
  std::size_t bucket_threshold = 2000;
};

/// Runs the requested checks in enum order. Throws PreconditionError if a
/// node of t has no position.
///
/// Rotation: at each node with three incident edges, the counterclockwise
/// circular order must be (parent, left, right). Nodes with fewer edges pass.
VerifyReport verify(const RootedOrderedTree& t, const GridEmbedding& e, const GridDims& dims,
                    const CheckSet& checks, const VerifyOptions& options = {});

/// Child ids (each standing for the edge to its parent) of the first pair of
/// conflicting edges in lexicographic order, if any.
std::optional<std::pair<NodeId, NodeId>> first_edge_conflict(
    const RootedOrderedTree& t, const GridEmbedding& e,
    PlanarityMethod method = PlanarityMethod::Naive);

/// Whether the counterclockwise order around `center` starting at `first`
/// visits `second` before `third`. False when two directions coincide.
bool ccw_order(const LatticePoint& center, const LatticePoint& first, const LatticePoint& second,
               const LatticePoint& third);

}  // namespace gridtree
