#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gridtree/report.hpp"

namespace gridtree {

/// Dense node index, 0..size()-1.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Default upper bound on generated tree sizes.
inline constexpr std::size_t kDefaultNodeCap = std::size_t{1} << 24;

enum class Side { Left, Right };

/// What part of a reduction gadget a node belongs to.
///
/// Field meaning by kind:
///   VarSpine         a = variable i, b = subtree 1..4, c = index on its path
///   VarAttached      a = i, c = index on the path hanging off subtree 1
///   VarSpineBump     a = i (right leaf near the bottom of subtree 1)
///   PT, PF           a = i, c = index on p_t / p_f (1 = root of the path)
///   PathHeadLeaf     a = i, b = 1 for p_t, 0 for p_f
///   LiteralLeaf      a = i, b = clause j
///   BlueSpine        a = t in 1..3, c = index
///   BlueClauseLeaf   b = clause j
///   LastSubtreeSpine c = index
///   VarBumpLeaf      a = i
enum class RoleKind : std::uint8_t {
  Plain,
  TopTree,
  VarSpine,
  VarAttached,
  VarSpineBump,
  PT,
  PF,
  PathHeadLeaf,
  LiteralLeaf,
  BlueSpine,
  BlueClauseLeaf,
  LastSubtreeSpine,
  VarBumpLeaf,
};

struct Role {
  RoleKind kind = RoleKind::Plain;
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const Role&, const Role&) = default;
};

std::string_view role_name(RoleKind kind);

/// Rooted binary tree with an explicit left/right slot per node. The slot
/// order is the combinatorial embedding. Immutable once constructed.
///
/// The raw constructor does not validate; use validate_binary() on trees
/// that did not come from TreeBuilder or parse_tree().
class RootedOrderedTree {
 public:
  RootedOrderedTree() = default;
  RootedOrderedTree(NodeId root, std::vector<NodeId> left, std::vector<NodeId> right,
                    std::vector<NodeId> parent, std::vector<Role> roles = {});

  std::size_t size() const { return left_.size(); }
  bool empty() const { return left_.empty(); }
  NodeId root() const { return root_; }

  NodeId left(NodeId v) const { return left_[v]; }
  NodeId right(NodeId v) const { return right_[v]; }
  NodeId child(NodeId v, Side s) const { return s == Side::Left ? left_[v] : right_[v]; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  const Role& role(NodeId v) const { return roles_[v]; }

  std::size_t child_count(NodeId v) const;
  bool is_leaf(NodeId v) const { return child_count(v) == 0; }
  /// Number of incident edges, counting the parent edge.
  std::size_t degree(NodeId v) const;

  /// Non-root nodes, each standing for the edge to its parent.
  std::size_t edge_count() const { return empty() ? 0 : size() - 1; }

  std::vector<NodeId> preorder() const;
  std::vector<std::size_t> depths() const;
  std::vector<std::size_t> subtree_sizes() const;

  /// v ≺ w: v lies on the path from the root to w, v != w.
  bool is_ancestor(NodeId v, NodeId w) const;

  /// Same shape and child order; ignores roles and ids are compared directly.
  bool same_structure(const RootedOrderedTree& other) const;

 private:
  NodeId root_ = kNoNode;
  std::vector<NodeId> left_;
  std::vector<NodeId> right_;
  std::vector<NodeId> parent_;
  std::vector<Role> roles_;
};

/// Incremental construction; build() renumbers nodes in preorder.
class TreeBuilder {
 public:
  NodeId add_root(Role role = {});
  /// Throws PreconditionError if the slot is taken.
  NodeId add_child(NodeId parent, Side side, Role role = {});
  /// Adds a path of `length` edges below `parent` (length + 1 new nodes),
  /// continuing through left slots. Returns the nodes top to bottom.
  std::vector<NodeId> add_path(NodeId parent, Side side, std::size_t length, Role role);
  /// Moves the left child of v to its empty right slot.
  void shift_left_child_right(NodeId v);
  void set_role(NodeId v, Role role);

  std::size_t size() const { return left_.size(); }

  struct Built {
    RootedOrderedTree tree;
    std::vector<NodeId> new_id;  // builder id -> preorder id
  };
  Built build() const;

 private:
  NodeId fresh(NodeId parent, Role role);

  NodeId root_ = kNoNode;
  std::vector<NodeId> left_;
  std::vector<NodeId> right_;
  std::vector<NodeId> parent_;
  std::vector<Role> roles_;
};

/// T_k: all 2^k leaves at depth k, 2^{k+1}-1 nodes in total.
RootedOrderedTree perfect_binary_tree(std::size_t k, std::size_t node_cap = kDefaultNodeCap);

/// Parses the nested form  node := "(" id child child ")",  child := node | ".".
/// Ids in the text are ignored; nodes are numbered in preorder.
RootedOrderedTree parse_tree(std::string_view text);

/// Canonical single-line form, e.g. "(0 (1 . .) (2 . .))". No trailing newline.
std::string serialize_tree(const RootedOrderedTree& t);

/// Root present, child links in range, parent links consistent, every node
/// reached exactly once from the root.
VerifyReport validate_binary(const RootedOrderedTree& t);

}  // namespace gridtree
