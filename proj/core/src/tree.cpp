#include "gridtree/tree.hpp"

#include <cctype>
#include <sstream>

#include "gridtree/error.hpp"

namespace gridtree {

std::string_view role_name(RoleKind kind) {
  switch (kind) {
    case RoleKind::Plain: return "plain";
    case RoleKind::TopTree: return "top";
    case RoleKind::VarSpine: return "var-spine";
    case RoleKind::VarAttached: return "var-attached";
    case RoleKind::VarSpineBump: return "var-spine-bump";
    case RoleKind::PT: return "pt";
    case RoleKind::PF: return "pf";
    case RoleKind::PathHeadLeaf: return "path-head-leaf";
    case RoleKind::LiteralLeaf: return "literal-leaf";
    case RoleKind::BlueSpine: return "blue-spine";
    case RoleKind::BlueClauseLeaf: return "blue-clause-leaf";
    case RoleKind::LastSubtreeSpine: return "last-spine";
    case RoleKind::VarBumpLeaf: return "var-bump-leaf";
  }
  return "plain";
}

RootedOrderedTree::RootedOrderedTree(NodeId root, std::vector<NodeId> left,
                                     std::vector<NodeId> right, std::vector<NodeId> parent,
                                     std::vector<Role> roles)
    : root_(root),
      left_(std::move(left)),
      right_(std::move(right)),
      parent_(std::move(parent)),
      roles_(std::move(roles)) {
  if (right_.size() != left_.size() || parent_.size() != left_.size()) {
    throw PreconditionError("tree arrays differ in length");
  }
  roles_.resize(left_.size());
}

std::size_t RootedOrderedTree::child_count(NodeId v) const {
  return static_cast<std::size_t>(left_[v] != kNoNode) + static_cast<std::size_t>(right_[v] != kNoNode);
}

std::size_t RootedOrderedTree::degree(NodeId v) const {
  return child_count(v) + static_cast<std::size_t>(parent_[v] != kNoNode);
}

std::vector<NodeId> RootedOrderedTree::preorder() const {
  std::vector<NodeId> order;
  if (empty()) return order;
  order.reserve(size());
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    if (right_[v] != kNoNode) stack.push_back(right_[v]);
    if (left_[v] != kNoNode) stack.push_back(left_[v]);
  }
  return order;
}

std::vector<std::size_t> RootedOrderedTree::depths() const {
  std::vector<std::size_t> depth(size(), 0);
  for (NodeId v : preorder()) {
    if (parent_[v] != kNoNode) depth[v] = depth[parent_[v]] + 1;
  }
  return depth;
}

std::vector<std::size_t> RootedOrderedTree::subtree_sizes() const {
  std::vector<std::size_t> sizes(size(), 1);
  const auto order = preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent_[*it] != kNoNode) sizes[parent_[*it]] += sizes[*it];
  }
  return sizes;
}

bool RootedOrderedTree::is_ancestor(NodeId v, NodeId w) const {
  for (NodeId u = parent_[w]; u != kNoNode; u = parent_[u]) {
    if (u == v) return true;
  }
  return false;
}

bool RootedOrderedTree::same_structure(const RootedOrderedTree& other) const {
  return root_ == other.root_ && left_ == other.left_ && right_ == other.right_ &&
         parent_ == other.parent_;
}

NodeId TreeBuilder::fresh(NodeId parent, Role role) {
  const auto id = static_cast<NodeId>(left_.size());
  left_.push_back(kNoNode);
  right_.push_back(kNoNode);
  parent_.push_back(parent);
  roles_.push_back(role);
  return id;
}

NodeId TreeBuilder::add_root(Role role) {
  if (root_ != kNoNode) throw PreconditionError("tree already has a root");
  root_ = fresh(kNoNode, role);
  return root_;
}

NodeId TreeBuilder::add_child(NodeId parent, Side side, Role role) {
  NodeId& slot = side == Side::Left ? left_.at(parent) : right_.at(parent);
  if (slot != kNoNode) throw PreconditionError("child slot already taken");
  const NodeId id = fresh(parent, role);
  (side == Side::Left ? left_ : right_)[parent] = id;
  return id;
}

std::vector<NodeId> TreeBuilder::add_path(NodeId parent, Side side, std::size_t length, Role role) {
  std::vector<NodeId> nodes;
  nodes.reserve(length + 1);
  role.c = 1;
  nodes.push_back(parent == kNoNode ? add_root(role) : add_child(parent, side, role));
  for (std::size_t i = 1; i <= length; ++i) {
    role.c = static_cast<int>(i + 1);
    nodes.push_back(add_child(nodes.back(), Side::Left, role));
  }
  return nodes;
}

void TreeBuilder::shift_left_child_right(NodeId v) {
  if (right_.at(v) != kNoNode) throw PreconditionError("right slot already taken");
  right_[v] = left_[v];
  left_[v] = kNoNode;
}

void TreeBuilder::set_role(NodeId v, Role role) { roles_.at(v) = role; }

TreeBuilder::Built TreeBuilder::build() const {
  RootedOrderedTree raw(root_, left_, right_, parent_, roles_);
  const auto order = raw.preorder();
  if (order.size() != size()) throw PreconditionError("builder holds unreachable nodes");
  std::vector<NodeId> new_id(size(), kNoNode);
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<NodeId>(i);
  auto remap = [&](NodeId v) { return v == kNoNode ? kNoNode : new_id[v]; };
  std::vector<NodeId> left(size()), right(size()), parent(size());
  std::vector<Role> roles(size());
  for (NodeId old = 0; old < size(); ++old) {
    const NodeId v = new_id[old];
    left[v] = remap(left_[old]);
    right[v] = remap(right_[old]);
    parent[v] = remap(parent_[old]);
    roles[v] = roles_[old];
  }
  return {RootedOrderedTree(remap(root_), std::move(left), std::move(right), std::move(parent),
                            std::move(roles)),
          std::move(new_id)};
}

RootedOrderedTree perfect_binary_tree(std::size_t k, std::size_t node_cap) {
  if (k >= 63 || (std::size_t{1} << (k + 1)) - 1 > node_cap) {
    throw ResourceError("perfect binary tree of height " + std::to_string(k) +
                        " exceeds the node cap of " + std::to_string(node_cap));
  }
  // Heap layout renumbered to preorder by the builder.
  const std::size_t n = (std::size_t{1} << (k + 1)) - 1;
  TreeBuilder b;
  std::vector<NodeId> heap(n);
  heap[0] = b.add_root();
  for (std::size_t i = 1; i < n; ++i) {
    heap[i] = b.add_child(heap[(i - 1) / 2], i % 2 == 1 ? Side::Left : Side::Right);
  }
  return b.build().tree;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  RootedOrderedTree parse() {
    TreeBuilder builder;
    // Each frame: builder node, number of child slots consumed so far.
    struct Frame {
      NodeId node;
      int slots;
    };
    std::vector<Frame> stack;

    skip_ws();
    expect('(');
    stack.push_back({builder.add_root(), 0});
    read_id();

    while (!stack.empty()) {
      skip_ws();
      if (at_end()) fail("unexpected end of input");
      const char c = peek();
      Frame& top = stack.back();
      if (c == ')') {
        if (top.slots < 2) fail("node needs two child slots");
        advance();
        stack.pop_back();
        continue;
      }
      if (top.slots == 2) {
        if (c == '(' || c == '.') {
          throw ArityError("node lists more than two children at line " + std::to_string(line_) +
                           ", column " + std::to_string(col_));
        }
        fail("expected ')'");
      }
      const Side side = top.slots == 0 ? Side::Left : Side::Right;
      ++top.slots;
      if (c == '.') {
        advance();
      } else if (c == '(') {
        advance();
        const NodeId child = builder.add_child(top.node, side);
        read_id();
        stack.push_back({child, 0});
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    skip_ws();
    if (!at_end()) fail("trailing characters after tree");
    return builder.build().tree;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void read_id() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected node id");
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

RootedOrderedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string serialize_tree(const RootedOrderedTree& t) {
  if (t.empty()) return {};
  const auto order = t.preorder();
  std::vector<NodeId> label(t.size());
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<NodeId>(i);

  std::string out;
  out.reserve(t.size() * 8);
  // Explicit stack of pending tokens: a node id, or a closing paren.
  constexpr NodeId kClose = kNoNode;
  constexpr NodeId kDot = kNoNode - 1;
  std::vector<NodeId> stack{t.root()};
  bool first = true;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (v == kClose) {
      out += ')';
      continue;
    }
    if (!first) out += ' ';
    first = false;
    if (v == kDot) {
      out += '.';
      continue;
    }
    out += '(';
    out += std::to_string(label[v]);
    stack.push_back(kClose);
    stack.push_back(t.right(v) == kNoNode ? kDot : t.right(v));
    stack.push_back(t.left(v) == kNoNode ? kDot : t.left(v));
  }
  return out;
}

VerifyReport validate_binary(const RootedOrderedTree& t) {
  VerifyReport report;
  const std::size_t n = t.size();
  if (n == 0 || t.root() >= n) {
    report.add("root", false, n == 0 ? "empty tree" : "root id out of range");
    return report;
  }
  if (t.parent(t.root()) != kNoNode) {
    report.add("root", false, "root has a parent");
    return report;
  }
  report.add("root", true);

  std::string links_detail;
  for (NodeId v = 0; v < n && links_detail.empty(); ++v) {
    for (NodeId c : {t.left(v), t.right(v)}) {
      if (c == kNoNode) continue;
      if (c >= n) {
        links_detail = "node " + std::to_string(v) + " has child id out of range";
      } else if (t.parent(c) != v) {
        links_detail = "node " + std::to_string(c) + " listed as child of " + std::to_string(v) +
                       " but its parent is " +
                       (t.parent(c) == kNoNode ? std::string("none") : std::to_string(t.parent(c)));
      }
      if (!links_detail.empty()) break;
    }
    if (links_detail.empty() && t.left(v) != kNoNode && t.left(v) == t.right(v)) {
      links_detail = "node " + std::to_string(t.left(v)) + " appears twice as child of " +
                     std::to_string(v);
    }
  }
  report.add("parent_links", links_detail.empty(), links_detail);
  if (!links_detail.empty()) return report;

  std::vector<int> seen(n, 0);
  std::vector<NodeId> stack{t.root()};
  std::string reach_detail;
  while (!stack.empty() && reach_detail.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (seen[v]++ > 0) {
      reach_detail = "node " + std::to_string(v) + " reached twice";
      break;
    }
    for (NodeId c : {t.left(v), t.right(v)}) {
      if (c != kNoNode) stack.push_back(c);
    }
  }
  if (reach_detail.empty()) {
    for (NodeId v = 0; v < n; ++v) {
      if (seen[v] == 0) {
        reach_detail = "node " + std::to_string(v) + " unreachable from root";
        break;
      }
    }
  }
  report.add("connected", reach_detail.empty(), reach_detail);
  return report;
}

}  // namespace gridtree
