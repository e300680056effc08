#pragma once

#include <string>

#include "updag/drawing.hpp"

namespace updag {

struct SvgOptions {
  double scale = 40.0;
  bool mark_crossings = false;
  bool show_labels = true;
};

/// Deterministic SVG 1.1 rendering; model y-axis points up on screen.
std::string render_svg(const Drawing& d, const SvgOptions& opt = {});

}  // namespace updag
