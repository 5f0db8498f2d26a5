#include "gridtree/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "gridtree/error.hpp"

namespace gridtree {

GridEmbedding GridEmbedding::from_points(const std::vector<LatticePoint>& points) {
  GridEmbedding e(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) e.pos_[i] = points[i];
  return e;
}

std::size_t GridEmbedding::placed_count() const {
  return static_cast<std::size_t>(
      std::count_if(pos_.begin(), pos_.end(), [](const auto& p) { return p.has_value(); }));
}

void GridEmbedding::set(NodeId v, LatticePoint p) {
  if (v >= pos_.size()) pos_.resize(static_cast<std::size_t>(v) + 1);
  pos_[v] = p;
}

void GridEmbedding::erase(NodeId v) {
  if (v < pos_.size()) pos_[v].reset();
}

const LatticePoint& GridEmbedding::at(NodeId v) const {
  if (!contains(v)) throw PreconditionError("missing position for node " + std::to_string(v));
  return *pos_[v];
}

bool GridEmbedding::is_total_on(std::size_t n) const {
  if (pos_.size() < n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pos_[i]) return false;
  }
  return true;
}

std::vector<LatticePoint> GridEmbedding::points() const {
  std::vector<LatticePoint> out;
  out.reserve(pos_.size());
  for (const auto& p : pos_) {
    if (p) out.push_back(*p);
  }
  return out;
}

GridEmbedding GridEmbedding::translated(std::int64_t dx, std::int64_t dy) const {
  GridEmbedding out = *this;
  for (auto& p : out.pos_) {
    if (p) *p = {p->x + dx, p->y + dy};
  }
  return out;
}

LatticePoint min_corner(const GridEmbedding& e) {
  const auto pts = e.points();
  if (pts.empty()) throw PreconditionError("empty embedding");
  LatticePoint lo = pts.front();
  for (const auto& p : pts) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
  }
  return lo;
}

GridDims dims_of(const GridEmbedding& e) {
  const auto pts = e.points();
  if (pts.empty()) throw PreconditionError("empty embedding");
  LatticePoint lo = pts.front();
  LatticePoint hi = pts.front();
  for (const auto& p : pts) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {hi.x - lo.x + 1, hi.y - lo.y + 1};
}

std::vector<LatticePoint> occupancy(const GridEmbedding& e, const GridDims& dims,
                                    std::optional<LatticePoint> anchor) {
  const LatticePoint lo = anchor ? *anchor : min_corner(e);
  std::unordered_set<LatticePoint> used;
  for (const auto& p : e.points()) {
    if (p.x < lo.x || p.y < lo.y || p.x >= lo.x + dims.width || p.y >= lo.y + dims.height) {
      throw PreconditionError("embedding exceeds the " + std::to_string(dims.width) + "x" +
                              std::to_string(dims.height) + " grid");
    }
    used.insert(p);
  }
  std::vector<LatticePoint> unused;
  for (std::int64_t y = lo.y + dims.height - 1; y >= lo.y; --y) {
    for (std::int64_t x = lo.x; x < lo.x + dims.width; ++x) {
      if (!used.contains({x, y})) unused.push_back({x, y});
    }
  }
  return unused;
}

std::string write_embedding(const GridEmbedding& e) {
  std::string out = "embedding v1\n";
  for (NodeId v = 0; v < e.size(); ++v) {
    if (!e.contains(v)) continue;
    const auto& p = e.at(v);
    out += std::to_string(v);
    out += ' ';
    out += std::to_string(p.x);
    out += ' ';
    out += std::to_string(p.y);
    out += '\n';
  }
  return out;
}

namespace {

template <typename Int>
Int parse_int(std::string_view token, std::size_t line, std::size_t column) {
  Int value{};
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("invalid integer '" + std::string(token) + "'", line, column);
  }
  return value;
}

}  // namespace

GridEmbedding parse_embedding(std::string_view text) {
  GridEmbedding e;
  std::size_t line_no = 0;
  bool header = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header) {
      if (line != "embedding v1") throw ParseError("expected header 'embedding v1'", line_no, 1);
      header = true;
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && line[i] == ' ') ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ') ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start), start + 1);
    }
    if (tokens.size() != 3) throw ParseError("expected '<id> <x> <y>'", line_no, 1);
    const auto id = parse_int<NodeId>(tokens[0].first, line_no, tokens[0].second);
    const auto x = parse_int<std::int64_t>(tokens[1].first, line_no, tokens[1].second);
    const auto y = parse_int<std::int64_t>(tokens[2].first, line_no, tokens[2].second);
    if (id == kNoNode) throw ParseError("node id out of range", line_no, tokens[0].second);
    if (e.contains(id)) throw ParseError("duplicate node id " + std::to_string(id), line_no, 1);
    e.set(id, {x, y});
  }
  if (!header) throw ParseError("expected header 'embedding v1'", 1, 1);
  return e;
}

}  // namespace gridtree
