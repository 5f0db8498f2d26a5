#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridtree/embedding.hpp"
#include "gridtree/tree.hpp"
#include "gridtree/verify.hpp"

namespace gridtree {

enum class SolveMode {
  Upward,        // every child strictly below its parent
  WeaklyUpward,  // every child at most as high as its parent
  General,       // no vertical constraint
};

enum class NodeOrder {
  Preorder,   // left subtree first
  Heuristic,  // larger child subtree first
};

struct SolveOptions {
  SolveMode mode = SolveMode::Upward;
  bool respect_rotation = false;
  bool forbid_edge_through_vertex = true;
  bool count_all = false;
  NodeOrder node_order = NodeOrder::Preorder;
  std::size_t node_cap = 14;
  std::size_t cell_cap = 25;
  /// Worker threads for the root's candidate cells. Results do not depend on it.
  unsigned threads = 1;
};

struct SolveStats {
  std::uint64_t expanded = 0;
  double time_ms = 0.0;
};

struct SolveResult {
  bool embeddable = false;
  /// First drawing in search order; always passes solve_checks(opts).
  std::optional<GridEmbedding> witness;
  std::optional<std::uint64_t> count;
  SolveStats stats;
};

/// The verifier checks a solver answer must satisfy: injective, bounds,
/// planar, plus upward / weakly_upward, rotation and edge_through_vertex as
/// the options request.
CheckSet solve_checks(const SolveOptions& opts);

/// Exhaustive backtracking over the w x h grid anchored at (0,0). Candidate
/// cells are scanned top row first, left to right. Throws ResourceError past
/// the caps and PreconditionError for inconsistent options.
SolveResult solve(const RootedOrderedTree& t, const GridDims& dims, const SolveOptions& opts);

/// Number of distinct position maps passing solve_checks(opts).
std::uint64_t count_embeddings(const RootedOrderedTree& t, const GridDims& dims,
                               SolveOptions opts);

/// Same count by brute force: every injective map V -> grid, filtered by
/// verify(). Limited to 7 nodes and 12 cells.
std::uint64_t oracle_enumerate(const RootedOrderedTree& t, const GridDims& dims,
                               const SolveOptions& opts);

/// One enumeration, one verify() per map, counted against several option sets.
std::vector<std::uint64_t> oracle_enumerate(const RootedOrderedTree& t, const GridDims& dims,
                                            const std::vector<SolveOptions>& opts);

/// One-line summary "expanded=<n> time_ms=<t>".
std::string format_stats(const SolveStats& stats);

}  // namespace gridtree
