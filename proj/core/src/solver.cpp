#include "gridtree/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "gridtree/error.hpp"

namespace gridtree {

CheckSet solve_checks(const SolveOptions& opts) {
  CheckSet checks{Check::Injective, Check::Bounds, Check::Planar};
  if (opts.mode == SolveMode::Upward) checks.insert(Check::Upward);
  if (opts.mode == SolveMode::WeaklyUpward) checks.insert(Check::WeaklyUpward);
  if (opts.respect_rotation) checks.insert(Check::Rotation);
  if (opts.forbid_edge_through_vertex) checks.insert(Check::EdgeThroughVertex);
  return checks;
}

namespace {

void validate_options(const RootedOrderedTree& t, const GridDims& dims, const SolveOptions& opts) {
  if (opts.threads == 0) throw PreconditionError("solver needs at least one thread");
  if (dims.width < 1 || dims.height < 1) throw PreconditionError("grid dimensions must be positive");
  if (!t.empty() && !validate_binary(t).ok()) throw PreconditionError("solver needs a valid binary tree");
  if (t.size() > opts.node_cap) {
    throw ResourceError("tree has " + std::to_string(t.size()) + " nodes; solver cap is " +
                        std::to_string(opts.node_cap));
  }
  if (dims.width * dims.height > static_cast<std::int64_t>(opts.cell_cap)) {
    throw ResourceError("grid has " + std::to_string(dims.width * dims.height) +
                        " cells; solver cap is " + std::to_string(opts.cell_cap));
  }
}

std::vector<NodeId> placement_order(const RootedOrderedTree& t, NodeOrder how) {
  if (how == NodeOrder::Preorder) return t.preorder();
  const auto sizes = t.subtree_sizes();
  std::vector<NodeId> order;
  std::vector<NodeId> stack{t.root()};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    NodeId first = t.left(v);
    NodeId second = t.right(v);
    if (first != kNoNode && second != kNoNode && sizes[second] > sizes[first]) std::swap(first, second);
    if (second != kNoNode) stack.push_back(second);
    if (first != kNoNode) stack.push_back(first);
  }
  return order;
}

struct Problem {
  const RootedOrderedTree& tree;
  GridDims dims;
  SolveOptions opts;
  std::vector<NodeId> order;
  std::vector<std::size_t> descendants;
};

struct BranchResult {
  std::uint64_t count = 0;
  std::uint64_t expanded = 0;
  std::optional<std::vector<LatticePoint>> first;
};

class Search {
 public:
  explicit Search(const Problem& p)
      : p_(p),
        pos_(p.tree.size()),
        placed_(p.tree.size(), 0),
        used_(static_cast<std::size_t>(p.dims.width * p.dims.height), 0),
        row_used_(static_cast<std::size_t>(p.dims.height), 0) {}

  // Candidate cells for the node at `depth`, in scan order.
  std::vector<LatticePoint> candidates(std::size_t depth) const {
    const NodeId v = p_.order[depth];
    const NodeId u = p_.tree.parent(v);
    std::int64_t top = p_.dims.height - 1;
    if (u != kNoNode && p_.opts.mode == SolveMode::Upward) top = pos_[u].y - 1;
    if (u != kNoNode && p_.opts.mode == SolveMode::WeaklyUpward) top = pos_[u].y;
    std::vector<LatticePoint> out;
    for (std::int64_t y = top; y >= 0; --y) {
      for (std::int64_t x = 0; x < p_.dims.width; ++x) {
        if (feasible(v, {x, y})) out.push_back({x, y});
      }
    }
    return out;
  }

  BranchResult run_from(std::size_t depth, const LatticePoint& cell, bool stop_on_first) {
    stop_on_first_ = stop_on_first;
    result_ = {};
    descend(depth, cell);
    return result_;
  }

  BranchResult run_all(bool stop_on_first) {
    stop_on_first_ = stop_on_first;
    result_ = {};
    if (p_.order.empty()) {
      result_.count = 1;
      result_.first = std::vector<LatticePoint>{};
      return result_;
    }
    for (const auto& cell : candidates(0)) {
      descend(0, cell);
      if (done()) break;
    }
    return result_;
  }

 private:
  bool done() const { return stop_on_first_ && result_.first.has_value(); }

  std::size_t cell_index(const LatticePoint& c) const {
    return static_cast<std::size_t>(c.y * p_.dims.width + c.x);
  }

  bool feasible(NodeId v, const LatticePoint& c) const {
    if (used_[cell_index(c)] != 0) return false;
    const auto& t = p_.tree;
    const auto& opts = p_.opts;

    if (opts.mode == SolveMode::Upward) {
      // Every descendant needs its own free cell strictly below.
      std::int64_t free_below = c.y * p_.dims.width;
      for (std::int64_t y = 0; y < c.y; ++y) free_below -= row_used_[static_cast<std::size_t>(y)];
      if (static_cast<std::int64_t>(p_.descendants[v]) > free_below) return false;
    }

    if (opts.forbid_edge_through_vertex) {
      for (NodeId e : edges_) {
        if (point_in_segment_interior(c, Segment(pos_[t.parent(e)], pos_[e]))) return false;
      }
    }

    const NodeId u = t.parent(v);
    if (u == kNoNode) return true;
    const Segment fresh(pos_[u], c);
    for (NodeId e : edges_) {
      if (segments_conflict(fresh, Segment(pos_[t.parent(e)], pos_[e]))) return false;
    }
    if (opts.forbid_edge_through_vertex) {
      for (NodeId w : nodes_) {
        if (point_in_segment_interior(pos_[w], fresh)) return false;
      }
    }
    if (opts.respect_rotation && t.parent(u) != kNoNode && t.left(u) != kNoNode &&
        t.right(u) != kNoNode) {
      const NodeId sibling = t.left(u) == v ? t.right(u) : t.left(u);
      if (placed_[sibling] != 0) {
        const LatticePoint& l = t.left(u) == v ? c : pos_[t.left(u)];
        const LatticePoint& r = t.right(u) == v ? c : pos_[t.right(u)];
        if (!ccw_order(pos_[u], pos_[t.parent(u)], l, r)) return false;
      }
    }
    return true;
  }

  void put(NodeId v, const LatticePoint& c) {
    pos_[v] = c;
    placed_[v] = 1;
    used_[cell_index(c)] = 1;
    ++row_used_[static_cast<std::size_t>(c.y)];
    nodes_.push_back(v);
    if (p_.tree.parent(v) != kNoNode) edges_.push_back(v);
  }

  void take(NodeId v) {
    placed_[v] = 0;
    used_[cell_index(pos_[v])] = 0;
    --row_used_[static_cast<std::size_t>(pos_[v].y)];
    nodes_.pop_back();
    if (p_.tree.parent(v) != kNoNode) edges_.pop_back();
  }

  // Places order[depth] at a cell already known to be feasible.
  void descend(std::size_t depth, const LatticePoint& cell) {
    const NodeId v = p_.order[depth];
    put(v, cell);
    ++result_.expanded;
    if (depth + 1 == p_.order.size()) {
      ++result_.count;
      if (!result_.first) result_.first = pos_;
    } else {
      for (const auto& next : candidates(depth + 1)) {
        descend(depth + 1, next);
        if (done()) break;
      }
    }
    take(v);
  }

  const Problem& p_;
  std::vector<LatticePoint> pos_;
  std::vector<char> placed_;
  std::vector<char> used_;
  std::vector<std::int64_t> row_used_;
  std::vector<NodeId> nodes_;
  std::vector<NodeId> edges_;
  bool stop_on_first_ = false;
  BranchResult result_;
};

BranchResult search(const Problem& p) {
  const bool stop = !p.opts.count_all;
  if (p.opts.threads <= 1 || p.order.empty()) return Search(p).run_all(stop);

  const auto roots = Search(p).candidates(0);
  std::vector<BranchResult> branch(roots.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{roots.size()};
  auto worker = [&] {
    Search s(p);
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      if (stop && i > first_hit.load()) continue;
      branch[i] = s.run_from(0, roots[i], stop);
      if (branch[i].first) {
        std::size_t seen = first_hit.load();
        while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < p.opts.threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  BranchResult merged;
  for (auto& b : branch) {
    merged.expanded += b.expanded;
    if (stop && merged.first) continue;
    merged.count += b.count;
    if (!merged.first && b.first) merged.first = std::move(b.first);
  }
  return merged;
}

}  // namespace

SolveResult solve(const RootedOrderedTree& t, const GridDims& dims, const SolveOptions& opts) {
  validate_options(t, dims, opts);
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  if (static_cast<std::int64_t>(t.size()) > dims.width * dims.height) {
    if (opts.count_all) result.count = 0;
    return result;
  }

  Problem p{t, dims, opts, t.empty() ? std::vector<NodeId>{} : placement_order(t, opts.node_order),
            {}};
  if (!t.empty()) {
    const auto sizes = t.subtree_sizes();
    p.descendants.resize(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) p.descendants[v] = sizes[v] - 1;
  }

  BranchResult found = search(p);
  result.stats.expanded = found.expanded;
  if (opts.count_all) result.count = found.count;
  if (found.first) {
    result.embeddable = true;
    result.witness = GridEmbedding::from_points(*found.first);
    VerifyOptions vo;
    vo.anchor = LatticePoint{0, 0};
    const VerifyReport report = verify(t, *result.witness, dims, solve_checks(opts), vo);
    if (!report.ok()) throw Error("internal: solver witness failed verification\n" + report.render());
  }
  result.stats.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::uint64_t count_embeddings(const RootedOrderedTree& t, const GridDims& dims, SolveOptions opts) {
  opts.count_all = true;
  return *solve(t, dims, opts).count;
}

std::uint64_t oracle_enumerate(const RootedOrderedTree& t, const GridDims& dims,
                               const SolveOptions& opts) {
  return oracle_enumerate(t, dims, std::vector<SolveOptions>{opts}).front();
}

std::vector<std::uint64_t> oracle_enumerate(const RootedOrderedTree& t, const GridDims& dims,
                                            const std::vector<SolveOptions>& opts) {
  const std::int64_t cells = dims.width * dims.height;
  if (t.size() > 7 || cells > 12) {
    throw ResourceError("oracle enumeration is limited to 7 nodes and 12 cells");
  }
  if (dims.width < 1 || dims.height < 1) throw PreconditionError("grid dimensions must be positive");
  std::vector<std::uint64_t> counts(opts.size(), 0);
  if (static_cast<std::int64_t>(t.size()) > cells) return counts;

  CheckSet all;
  std::vector<CheckSet> wanted;
  for (const auto& o : opts) {
    wanted.push_back(solve_checks(o));
    all.insert(wanted.back().begin(), wanted.back().end());
  }
  VerifyOptions vo;
  vo.anchor = LatticePoint{0, 0};

  const std::size_t n = t.size();
  GridEmbedding e(n);
  std::vector<char> taken(static_cast<std::size_t>(cells), 0);
  auto visit = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      const VerifyReport report = verify(t, e, dims, all, vo);
      for (std::size_t k = 0; k < opts.size(); ++k) {
        bool ok = true;
        for (Check c : wanted[k]) ok = ok && report.passed(check_name(c));
        counts[k] += ok ? 1 : 0;
      }
      return;
    }
    for (std::int64_t c = 0; c < cells; ++c) {
      if (taken[static_cast<std::size_t>(c)] != 0) continue;
      taken[static_cast<std::size_t>(c)] = 1;
      e.set(static_cast<NodeId>(v), {c % dims.width, c / dims.width});
      self(self, v + 1);
      taken[static_cast<std::size_t>(c)] = 0;
    }
  };
  visit(visit, 0);
  return counts;
}

std::string format_stats(const SolveStats& stats) {
  std::ostringstream os;
  os << "expanded=" << stats.expanded << " time_ms=" << static_cast<std::int64_t>(stats.time_ms);
  return os.str();
}

}  // namespace gridtree
