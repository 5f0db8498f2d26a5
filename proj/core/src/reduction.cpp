#include "gridtree/reduction.hpp"

#include <sstream>

#include "gridtree/error.hpp"

namespace gridtree {

int ceil_log2(std::int64_t v) {
  int l = 0;
  while ((std::int64_t{1} << l) < v) ++l;
  return l;
}

std::int64_t reduction_width(int n, int /*m*/) { return 4 * std::int64_t{n} + 4; }

std::int64_t reduction_height(int n, int m) {
  return ceil_log2(reduction_width(n, m)) + 5 * std::int64_t{n} + 4 * std::int64_t{m} + 1;
}

std::int64_t reduction_below_top_count(int n, int m) {
  return (5 * std::int64_t{n} + 4 * std::int64_t{m} + 1) * reduction_width(n, m);
}

std::int64_t literal_parent_index(int n, int i, int j, int delta) {
  return 5 * std::int64_t{n - i + 1} + 4 * std::int64_t{j - 1} + delta;
}

ReductionOutput reduce(const CnfFormula& f, int delta) {
  const int n = f.n;
  const int m = static_cast<int>(f.m());
  const std::int64_t w = reduction_width(n, m);
  const std::int64_t big_r = 5 * std::int64_t{n} + 4 * std::int64_t{m};
  const int levels = ceil_log2(w);

  TreeBuilder b;
  // Top tree in heap layout; its last level provides the attachment slots.
  std::vector<NodeId> heap{b.add_root({RoleKind::TopTree})};
  const std::size_t top_size = (std::size_t{1} << levels) - 1;
  for (std::size_t i = 1; i < top_size; ++i) {
    heap.push_back(b.add_child(heap[(i - 1) / 2], i % 2 == 1 ? Side::Left : Side::Right,
                               {RoleKind::TopTree}));
  }
  const std::size_t first_leaf = (std::size_t{1} << (levels - 1)) - 1;
  const auto leaf_count = static_cast<std::int64_t>(std::size_t{1} << (levels - 1));
  struct Slot {
    NodeId parent;
    Side side;
  };
  std::vector<Slot> slots;
  const std::int64_t doubled = w - leaf_count;
  for (std::int64_t l = 0; l < leaf_count; ++l) {
    const NodeId leaf = heap[first_leaf + static_cast<std::size_t>(l)];
    slots.push_back({leaf, Side::Left});
    if (l < doubled) slots.push_back({leaf, Side::Right});
  }

  ReductionOutput out;
  out.formula = f;
  out.w = w;
  out.h = reduction_height(n, m);
  out.subtree_row = big_r;
  out.top_levels = levels;
  out.delta = delta;
  out.subtree_roots.resize(static_cast<std::size_t>(w));
  out.v_nodes.resize(static_cast<std::size_t>(n));
  out.pt_roots.resize(static_cast<std::size_t>(n));
  out.pf_roots.resize(static_cast<std::size_t>(n));

  auto path = [&](std::int64_t s, std::int64_t length, Role role) {
    const Slot& slot = slots[static_cast<std::size_t>(s - 1)];
    auto nodes = b.add_path(slot.parent, slot.side, static_cast<std::size_t>(length), role);
    out.subtree_roots[static_cast<std::size_t>(s - 1)] = nodes.front();
    return nodes;
  };
  auto at = [](const std::vector<NodeId>& nodes, std::int64_t one_based) {
    if (one_based < 1 || one_based > static_cast<std::int64_t>(nodes.size())) {
      throw PreconditionError("path index " + std::to_string(one_based) + " out of range");
    }
    return nodes[static_cast<std::size_t>(one_based - 1)];
  };

  for (int i = 1; i <= n; ++i) {
    const std::int64_t s0 = 4 * std::int64_t{i - 1};
    const std::int64_t v_row = big_r - 5 * std::int64_t{i - 1};

    const auto spine = path(s0 + 1, big_r, {RoleKind::VarSpine, i, 1});
    b.add_path(at(spine, 5 * std::int64_t{i - 1} + 4), Side::Right,
               static_cast<std::size_t>(v_row - 4), {RoleKind::VarAttached, i});
    b.add_child(at(spine, big_r), Side::Right, {RoleKind::VarSpineBump, i});

    path(s0 + 2, 5 * std::int64_t{i - 1} + 1, {RoleKind::VarSpine, i, 2});

    const auto stem = path(s0 + 3, 5 * std::int64_t{i - 1}, {RoleKind::VarSpine, i, 3});
    const NodeId v = stem.back();
    const auto pt = b.add_path(v, Side::Left, static_cast<std::size_t>(v_row - 2), {RoleKind::PT, i});
    const auto pf = b.add_path(v, Side::Right, static_cast<std::size_t>(v_row - 2), {RoleKind::PF, i});
    b.add_child(pt.front(), Side::Right, {RoleKind::PathHeadLeaf, i, 1});
    b.shift_left_child_right(pf.front());
    b.add_child(pf.front(), Side::Left, {RoleKind::PathHeadLeaf, i, 0});
    out.v_nodes[static_cast<std::size_t>(i - 1)] = v;
    out.pt_roots[static_cast<std::size_t>(i - 1)] = pt.front();
    out.pf_roots[static_cast<std::size_t>(i - 1)] = pf.front();

    for (int j = 1; j <= m; ++j) {
      const Clause& c = f.clauses[static_cast<std::size_t>(j - 1)];
      for (int pos = 0; pos < 3; ++pos) {
        if (c.lits[static_cast<std::size_t>(pos)].var != i) continue;
        const auto& host = c.lits[static_cast<std::size_t>(pos)].positive ? pt : pf;
        const std::int64_t k = literal_parent_index(n, i, j, delta);
        if (k < 2) throw PreconditionError("literal leaf index collides with the path head");
        const NodeId a = at(host, k);
        NodeId leaf = kNoNode;
        if (pos == 2) {
          b.shift_left_child_right(a);
          leaf = b.add_child(a, Side::Left, {RoleKind::LiteralLeaf, i, j});
        } else {
          leaf = b.add_child(a, Side::Right, {RoleKind::LiteralLeaf, i, j});
        }
        out.literal_leaves.push_back({i, j, pos, leaf, a});
      }
    }

    path(s0 + 4, 5 * std::int64_t{i - 1}, {RoleKind::VarSpine, i, 4});
  }

  const std::int64_t sb = 4 * std::int64_t{n};
  for (int t = 1; t <= 3; ++t) {
    const auto blue = path(sb + t, big_r, {RoleKind::BlueSpine, t});
    if (t == 3) {
      for (int j = 1; j <= m; ++j) {
        b.add_child(at(blue, 5 * std::int64_t{n} + 4 * std::int64_t{j}), Side::Right,
                    {RoleKind::BlueClauseLeaf, 0, j});
      }
    }
  }
  const auto last = path(sb + 4, 5 * std::int64_t{n}, {RoleKind::LastSubtreeSpine});
  for (int i = 1; i <= n; ++i) {
    b.add_child(at(last, 5 * std::int64_t{i} - 4), Side::Right, {RoleKind::VarBumpLeaf, i});
  }

  auto built = b.build();
  auto remap = [&](NodeId& v) { v = built.new_id[v]; };
  for (auto& v : out.subtree_roots) remap(v);
  for (auto& v : out.v_nodes) remap(v);
  for (auto& v : out.pt_roots) remap(v);
  for (auto& v : out.pf_roots) remap(v);
  for (auto& l : out.literal_leaves) {
    remap(l.leaf);
    remap(l.parent);
  }
  out.tree = std::move(built.tree);
  return out;
}

namespace {

// Offset of a literal leaf from its parent, by clause truth pattern. The
// three leaves of a satisfied clause land in three distinct rows.
LatticePoint literal_offset(int position, const std::array<bool, 3>& val) {
  const bool t1 = val[0], t2 = val[1], t3 = val[2];
  const bool first_is_only_true = t1 && !t2 && !t3;
  switch (position) {
    case 0:
      if (first_is_only_true) return {1, -1};
      if (t1) return {1, -3};
      return {1, -2};
    case 1:
      if (t2 && !t3) return {1, -1};
      if (t2) return {1, -2};
      if (first_is_only_true) return {0, -1};
      return {1, -1};
    default:
      if (t3) return {0, -1};
      if (t1 && !t2) return {-1, -2};  // second literal sits directly below its parent
      return {-1, -1};
  }
}

}  // namespace

GridEmbedding encode_embedding(const ReductionOutput& r, const Assignment& a) {
  const CnfFormula& f = r.formula;
  if (a.values.size() != static_cast<std::size_t>(f.n)) {
    throw PreconditionError("assignment has " + std::to_string(a.values.size()) +
                            " values for " + std::to_string(f.n) + " variables");
  }
  for (std::size_t j = 0; j < f.m(); ++j) {
    if (!clause_satisfied(f.clauses[j], a)) {
      throw PreconditionError("assignment does not satisfy clause " + std::to_string(j + 1));
    }
  }

  const auto& t = r.tree;
  const std::int64_t w = r.w;
  const std::int64_t big_r = r.subtree_row;
  const std::int64_t rows = r.h;
  std::vector<char> used(static_cast<std::size_t>(w * rows), 0);
  GridEmbedding e(t.size());

  auto place = [&](NodeId v, LatticePoint p) {
    if (p.x < 0 || p.x >= w || p.y < 0 || p.y >= rows) {
      throw Error("encoding places node " + std::to_string(v) + " outside the grid");
    }
    char& cell = used[static_cast<std::size_t>(p.y * w + p.x)];
    if (cell != 0) throw Error("encoding places node " + std::to_string(v) + " on a used cell");
    cell = 1;
    e.set(v, p);
  };

  // Top tree: each node above the midpoint of the subtree roots below it.
  std::vector<std::int64_t> lo(t.size(), -1), hi(t.size(), -1);
  for (std::size_t s = 0; s < r.subtree_roots.size(); ++s) {
    lo[r.subtree_roots[s]] = hi[r.subtree_roots[s]] = static_cast<std::int64_t>(s);
  }
  const auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (t.role(v).kind != RoleKind::TopTree) continue;
    for (NodeId c : {t.left(v), t.right(v)}) {
      if (c == kNoNode) continue;
      lo[v] = lo[v] < 0 ? lo[c] : std::min(lo[v], lo[c]);
      hi[v] = std::max(hi[v], hi[c]);
    }
  }
  const auto depth = t.depths();
  for (NodeId v : order) {
    if (t.role(v).kind != RoleKind::TopTree) continue;
    place(v, {(lo[v] + hi[v]) / 2, big_r + r.top_levels - static_cast<std::int64_t>(depth[v])});
  }
  for (std::size_t s = 0; s < r.subtree_roots.size(); ++s) {
    place(r.subtree_roots[s], {static_cast<std::int64_t>(s), big_r});
  }

  // Nodes whose position is fixed relative to their parent.
  enum class Fixed : std::uint8_t { None, PtRoot, PfRoot, Literal };
  std::vector<Fixed> fixed(t.size(), Fixed::None);
  std::vector<int> var_of(t.size(), 0);
  std::vector<LatticePoint> literal_delta(t.size());
  for (int i = 1; i <= f.n; ++i) {
    fixed[r.pt_roots[static_cast<std::size_t>(i - 1)]] = Fixed::PtRoot;
    fixed[r.pf_roots[static_cast<std::size_t>(i - 1)]] = Fixed::PfRoot;
    var_of[r.pt_roots[static_cast<std::size_t>(i - 1)]] = i;
    var_of[r.pf_roots[static_cast<std::size_t>(i - 1)]] = i;
  }
  for (const auto& leaf : r.literal_leaves) {
    const Clause& c = f.clauses[static_cast<std::size_t>(leaf.clause - 1)];
    const std::array<bool, 3> val{literal_value(c.lits[0], a), literal_value(c.lits[1], a),
                                  literal_value(c.lits[2], a)};
    fixed[leaf.leaf] = Fixed::Literal;
    literal_delta[leaf.leaf] = literal_offset(leaf.position, val);
  }

  auto leftmost_free = [&](std::int64_t y, NodeId v) -> LatticePoint {
    if (y >= 0) {
      for (std::int64_t x = 0; x < w; ++x) {
        if (used[static_cast<std::size_t>(y * w + x)] == 0) return {x, y};
      }
    }
    throw Error("encoding found no free cell in row " + std::to_string(y) + " for node " +
                std::to_string(v));
  };

  // Subtrees left to right. Both children of a node are placed before either
  // is expanded, so fixed cells are taken before the leftmost-free scan of
  // any deeper node can reach them.
  for (NodeId root : r.subtree_roots) {
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      const LatticePoint p = e.at(u);
      for (NodeId c : {t.left(u), t.right(u)}) {
        if (c == kNoNode) continue;
        switch (fixed[c]) {
          case Fixed::PtRoot:
            place(c, a[var_of[c]] ? LatticePoint{p.x, p.y - 1} : LatticePoint{p.x - 1, p.y - 2});
            break;
          case Fixed::PfRoot:
            place(c, a[var_of[c]] ? LatticePoint{p.x + 1, p.y - 2} : LatticePoint{p.x, p.y - 1});
            break;
          case Fixed::Literal:
            place(c, {p.x + literal_delta[c].x, p.y + literal_delta[c].y});
            break;
          case Fixed::None:
            place(c, leftmost_free(p.y - 1, c));
            break;
        }
      }
      if (t.right(u) != kNoNode) stack.push_back(t.right(u));
      if (t.left(u) != kNoNode) stack.push_back(t.left(u));
    }
  }
  return e;
}

Assignment decode_assignment(const ReductionOutput& r, const GridEmbedding& e) {
  Assignment a;
  for (int i = 1; i <= r.n(); ++i) {
    const auto yt = e.at(r.pt_roots[static_cast<std::size_t>(i - 1)]).y;
    const auto yf = e.at(r.pf_roots[static_cast<std::size_t>(i - 1)]).y;
    if (yt == yf) {
      throw PreconditionError("p_t and p_f of x" + std::to_string(i) + " start on the same row");
    }
    a.values.push_back(yt > yf);
  }
  return a;
}

std::string write_meta(const ReductionOutput& r) {
  std::ostringstream os;
  os << "dims " << r.w << ' ' << r.h << '\n';
  os << "cnf " << r.n() << ' ' << r.m() << '\n';
  for (int j = 1; j <= r.m(); ++j) {
    os << "clause " << j;
    for (const auto& l : r.formula.clauses[static_cast<std::size_t>(j - 1)].lits) {
      os << ' ' << (l.positive ? l.var : -l.var);
    }
    os << '\n';
  }
  os << "delta " << r.delta << '\n';
  for (std::size_t s = 0; s < r.subtree_roots.size(); ++s) {
    os << "root " << s + 1 << ' ' << r.subtree_roots[s] << '\n';
  }
  for (int i = 1; i <= r.n(); ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    os << "vi " << i << ' ' << r.v_nodes[k] << '\n';
    os << "pt " << i << ' ' << r.pt_roots[k] << '\n';
    os << "pf " << i << ' ' << r.pf_roots[k] << '\n';
  }
  for (const auto& l : r.literal_leaves) {
    os << "lit " << l.var << ' ' << l.clause << ' ' << l.leaf << '\n';
  }
  return os.str();
}

ReductionOutput read_meta(std::string_view text) {
  struct Record {
    std::string key;
    std::vector<long long> values;
    std::size_t line;
  };
  std::vector<Record> records;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Record rec{{}, {}, line_no};
    ls >> rec.key;
    long long v = 0;
    while (ls >> v) rec.values.push_back(v);
    if (!ls.eof()) throw ParseError("non-numeric field in meta record", line_no, 1);
    records.push_back(std::move(rec));
  }

  int n = -1;
  int m = -1;
  int delta = 0;
  std::vector<std::vector<int>> clauses;
  for (const auto& rec : records) {
    auto need = [&](std::size_t count) {
      if (rec.values.size() != count) {
        throw ParseError("meta record '" + rec.key + "' expects " + std::to_string(count) +
                             " fields",
                         rec.line, 1);
      }
    };
    if (rec.key == "cnf") {
      need(2);
      n = static_cast<int>(rec.values[0]);
      m = static_cast<int>(rec.values[1]);
    } else if (rec.key == "clause") {
      need(4);
      if (rec.values[0] != static_cast<long long>(clauses.size()) + 1) {
        throw ParseError("clause records out of order", rec.line, 1);
      }
      clauses.push_back({static_cast<int>(rec.values[1]), static_cast<int>(rec.values[2]),
                         static_cast<int>(rec.values[3])});
    } else if (rec.key == "delta") {
      need(1);
      delta = static_cast<int>(rec.values[0]);
    }
  }
  if (n < 0) throw ParseError("meta file lacks a 'cnf' record", 0, 0);
  if (static_cast<int>(clauses.size()) != m) {
    throw ParseError("meta file declares " + std::to_string(m) + " clauses, lists " +
                         std::to_string(clauses.size()),
                     0, 0);
  }

  ReductionOutput r = reduce(make_formula(n, clauses), delta);

  auto check = [](bool ok, const Record& rec) {
    if (!ok) throw ParseError("meta record '" + rec.key + "' does not match the reduction", rec.line, 1);
  };
  auto node_at = [](const std::vector<NodeId>& v, long long one_based) {
    return one_based >= 1 && one_based <= static_cast<long long>(v.size())
               ? static_cast<long long>(v[static_cast<std::size_t>(one_based - 1)])
               : -1;
  };
  for (const auto& rec : records) {
    if (rec.key == "dims") {
      check(rec.values.size() == 2 && rec.values[0] == r.w && rec.values[1] == r.h, rec);
    } else if (rec.key == "root") {
      check(rec.values.size() == 2 && node_at(r.subtree_roots, rec.values[0]) == rec.values[1], rec);
    } else if (rec.key == "vi") {
      check(rec.values.size() == 2 && node_at(r.v_nodes, rec.values[0]) == rec.values[1], rec);
    } else if (rec.key == "pt") {
      check(rec.values.size() == 2 && node_at(r.pt_roots, rec.values[0]) == rec.values[1], rec);
    } else if (rec.key == "pf") {
      check(rec.values.size() == 2 && node_at(r.pf_roots, rec.values[0]) == rec.values[1], rec);
    } else if (rec.key == "lit") {
      bool found = false;
      for (const auto& l : r.literal_leaves) {
        if (rec.values.size() == 3 && l.var == rec.values[0] && l.clause == rec.values[1]) {
          found = static_cast<long long>(l.leaf) == rec.values[2];
        }
      }
      check(found, rec);
    } else if (rec.key != "cnf" && rec.key != "clause" && rec.key != "delta") {
      throw ParseError("unknown meta record '" + rec.key + "'", rec.line, 1);
    }
  }
  return r;
}

}  // namespace gridtree
