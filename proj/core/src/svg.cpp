#include "gridtree/svg.hpp"

#include <sstream>

#include "gridtree/error.hpp"

namespace gridtree {

namespace {

std::string_view role_class(RoleKind kind) {
  switch (kind) {
    case RoleKind::VarSpine:
    case RoleKind::VarAttached:
    case RoleKind::VarSpineBump:
    case RoleKind::PT:
    case RoleKind::PF:
    case RoleKind::PathHeadLeaf:
    case RoleKind::LiteralLeaf:
      return "var";
    case RoleKind::BlueSpine:
    case RoleKind::BlueClauseLeaf:
    case RoleKind::LastSubtreeSpine:
    case RoleKind::VarBumpLeaf:
      return "clause";
    case RoleKind::TopTree:
      return "top";
    case RoleKind::Plain:
      break;
  }
  return "";
}

}  // namespace

std::string render_svg(const RootedOrderedTree& t, const GridEmbedding& e, const SvgStyle& style) {
  for (NodeId v = 0; v < t.size(); ++v) {
    if (!e.contains(v)) throw PreconditionError("missing position for node " + std::to_string(v));
  }
  GridEmbedding own(t.size());
  for (NodeId v = 0; v < t.size(); ++v) own.set(v, e.at(v));
  const GridDims dims = t.empty() ? GridDims{1, 1} : dims_of(own);
  const LatticePoint lo = t.empty() ? LatticePoint{0, 0} : min_corner(own);
  const std::int64_t top = lo.y + dims.height - 1;

  auto px = [&](std::int64_t x) { return style.margin + (x - lo.x) * style.scale; };
  auto py = [&](std::int64_t y) { return style.margin + (top - y) * style.scale; };

  std::ostringstream os;
  const auto width = 2 * style.margin + (dims.width - 1) * style.scale;
  const auto height = 2 * style.margin + (dims.height - 1) * style.scale;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<style>line{stroke:#000;stroke-width:1.5}circle{fill:#000}"
        "circle.dot{fill:#bbb}.var{stroke:#c00;fill:#c00}.clause{stroke:#06c;fill:#06c}"
        "</style>\n";

  if (style.lattice_dots && !t.empty()) {
    for (const auto& p : occupancy(own, dims, lo)) {
      os << "<circle class=\"dot\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"1.5\"/>\n";
    }
  }
  auto cls = [&](NodeId v) -> std::string {
    if (!style.role_colors) return "";
    const auto c = role_class(t.role(v).kind);
    return c.empty() ? "" : " class=\"" + std::string(c) + "\"";
  };
  for (NodeId v = 0; v < t.size(); ++v) {
    const NodeId u = t.parent(v);
    if (u == kNoNode) continue;
    os << "<line" << cls(v) << " x1=\"" << px(own.at(u).x) << "\" y1=\"" << py(own.at(u).y)
       << "\" x2=\"" << px(own.at(v).x) << "\" y2=\"" << py(own.at(v).y) << "\"/>\n";
  }
  for (NodeId v = 0; v < t.size(); ++v) {
    os << "<circle" << cls(v) << " cx=\"" << px(own.at(v).x) << "\" cy=\"" << py(own.at(v).y)
       << "\" r=\"" << style.radius << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gridtree
