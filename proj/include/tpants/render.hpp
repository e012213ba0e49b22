#pragma once

// SVG figures in the Poincare disk: arcs are geodesics, drawn as circular
// arcs orthogonal to the boundary circle.

#include "tpants/triangulation.hpp"

#include <string>

namespace tpants {

struct RenderOptions {
  int size = 600;
  bool labels = true;
};

/// The arcs of v inside the region together with the region sides. Arcs of
/// E are drawn black, added arcs red. Output is deterministic.
std::string render_svg(const FinTriangulation& v, const Polygon& region, const RenderOptions& options = {});

}  // namespace tpants
