#pragma once

#include <string>

#include "gridtree/embedding.hpp"
#include "gridtree/tree.hpp"

namespace gridtree {

struct SvgStyle {
  int scale = 20;          // pixels per lattice unit
  int margin = 20;
  double radius = 4.0;
  bool lattice_dots = false;  // small dots on unused points of the bounding box
  bool role_colors = false;   // classes "var" (red) and "clause" (blue) from node roles
};

/// Deterministic SVG: one circle per vertex, one line per edge. The y axis
/// is flipped so larger y is drawn higher.
std::string render_svg(const RootedOrderedTree& t, const GridEmbedding& e,
                       const SvgStyle& style = {});

}  // namespace gridtree
