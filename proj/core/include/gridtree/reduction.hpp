#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gridtree/cnf.hpp"
#include "gridtree/embedding.hpp"
#include "gridtree/tree.hpp"

namespace gridtree {

/// Gadget tree for a 3SAT formula whose upward drawings with the fixed child
/// order fit a w x h grid exactly when the formula is satisfiable.
///
/// Layout (0-based x, rows counted from the bottom):
///   - 4n+4 subtree roots on row R = 5n+4m, subtree s at x = s-1;
///   - four subtrees per variable, then three long clause-side paths and a
///     short path carrying one bump leaf per variable;
///   - a perfect top tree of depth L-1 above them, L = ceil(lg(4n+4)).
struct ReductionOutput {
  struct LiteralLeaf {
    int var = 0;       // i, 1-based
    int clause = 0;    // j, 1-based
    int position = 0;  // 0, 1, 2: first, second, third literal of the clause
    NodeId leaf = kNoNode;
    NodeId parent = kNoNode;
  };

  CnfFormula formula;
  RootedOrderedTree tree;
  std::int64_t w = 0;
  std::int64_t h = 0;
  std::int64_t subtree_row = 0;  // R
  int top_levels = 0;            // L
  int delta = 0;
  std::vector<NodeId> subtree_roots;  // [s-1]
  std::vector<NodeId> v_nodes;        // [i-1], common parent of p_t and p_f
  std::vector<NodeId> pt_roots;       // [i-1]
  std::vector<NodeId> pf_roots;       // [i-1]
  std::vector<LiteralLeaf> literal_leaves;

  int n() const { return formula.n; }
  int m() const { return static_cast<int>(formula.m()); }
  std::size_t top_tree_size() const { return (std::size_t{1} << top_levels) - 1; }
};

int ceil_log2(std::int64_t v);

/// Width 4n+4: one column per subtree root.
std::int64_t reduction_width(int n, int m);
/// ceil(lg(4n+4)) + 5n + 4m + 1.
std::int64_t reduction_height(int n, int m);
/// (5n+4m+1)(4n+4): the cells of rows 0..R, all of which must be used.
std::int64_t reduction_below_top_count(int n, int m);

/// Path vertex (1-based index on p_t or p_f of x_i) carrying the literal leaf
/// for clause j: 5(n-i+1) + 4(j-1) + delta. Only delta = 0 yields drawings.
std::int64_t literal_parent_index(int n, int i, int j, int delta = 0);

ReductionOutput reduce(const CnfFormula& f, int delta = 0);

/// Upward drawing of r.tree in the w x h grid anchored at (0,0) that uses every
/// point of rows 0..R. Throws PreconditionError if `a` does not satisfy the
/// formula, Error if the layout runs out of cells (only for delta != 0).
GridEmbedding encode_embedding(const ReductionOutput& r, const Assignment& a);

/// x_i is true iff the root of p_t is strictly higher than the root of p_f.
/// Throws PreconditionError on missing positions or equal heights.
Assignment decode_assignment(const ReductionOutput& r, const GridEmbedding& e);

/// Meta file: "dims", "cnf", "clause", "delta", "root", "vi", "pt", "pf" and
/// "lit" records, one per line.
std::string write_meta(const ReductionOutput& r);

/// Rebuilds the reduction described by a meta file and checks that every
/// recorded id and dimension matches. Throws ParseError on mismatch.
ReductionOutput read_meta(std::string_view text);

}  // namespace gridtree
