#pragma once

#include <string>

#include "rookdraw/drawing.hpp"

namespace rookdraw {

struct SvgOptions {
  int scale = 24;          // pixels per grid unit
  bool grid_lines = true;
  bool labels = true;
};

// Deterministic SVG 1.1 (lines, circles, text); y-axis flipped so the grid
// origin is bottom-left.
std::string render_svg(const Drawing& d, const SvgOptions& opt = {});

}  // namespace rookdraw
