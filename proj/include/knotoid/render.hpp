#pragma once

// SVG drawing of a diagram. The layout is a Tutte embedding of the
// barycentric subdivision of the combinatorial map (crossings and endpoints,
// arc midpoints, face centres), with the outer face pinned to a circle: the
// begin-face for open diagrams, the longest face for knots.

#include <string>

#include "knotoid/code.hpp"

namespace knotoid {

struct RenderOptions {
  bool shortcut = false;  // overlay the canonical minimal shortcut (open diagrams)
};

std::string render_svg(const Diagram& d, const RenderOptions& options = {});

}  // namespace knotoid
