#pragma once

#include <array>
#include <optional>
#include <string>

#include "atlas/shear.hpp"

namespace atlas {

struct RenderOptions {
  int circles = 8;
  int rays = 24;
  double r_max = 0.99;
  double boundary_r = 0.999;
  int samples_per_curve = 720;
  /// xmin, ymin, xmax, ymax in the image plane; fitted to the 1st-99th
  /// percentile of the sampled points (plus 5% padding) when unset.
  std::optional<std::array<double, 4>> viewport;
  double grid_stroke = 0.6;
  double boundary_stroke = 1.4;
  int pixels = 800;
};

/// SVG 1.1 document: one <path> per image circle, per image ray and for the
/// near-boundary curve. Points that cannot be evaluated or that fly far
/// outside the viewport split the path instead of being joined.
std::string render_svg(const HarmonicMap& F, const RenderOptions& opts = {});

}  // namespace atlas
