#pragma once

#include <string>
#include <vector>

#include "mineuclid/gaussint.hpp"

namespace mineuclid {

/// Rendering parameters for SVG point-set export. Output bytes are a pure
/// function of (points, spec, region index).
struct RenderSpec {
  enum class Style { square, disc };
  int scale = 10;  // pixels per lattice unit, >= 1
  Style style = Style::square;
  bool outline = false;  // draw the octagonal hull of region n
};

/// One "re,im" line per point, in the given order.
std::string render_csv(const std::vector<GaussInt>& points);

/// Compact JSON array of [re,im] pairs, one line.
std::string render_json(const std::vector<GaussInt>& points);

/// SVG with one glyph per point; the viewBox covers the n-th octagonal
/// region plus a one-unit margin.
std::string render_svg(int n, const std::vector<GaussInt>& points, const RenderSpec& spec);

}  // namespace mineuclid
