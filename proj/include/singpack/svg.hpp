#pragma once

#include "singpack/toric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace singpack {

struct SvgSegment {
    Vec2 from;
    Vec2 to;
};

/// SVG 1.1 figure of a moment polytope, width 640, y axis pointing up.
/// Shaded sub-polygons are drawn under the outline; segments (e.g. the
/// separatrix) on top. The rational-to-pixel scale factor is printed in a
/// text element and an XML comment.
std::string polytope_svg(const Polytope& outline,
                         const std::vector<Polytope>& shaded = {},
                         const std::vector<SvgSegment>& segments = {});

} // namespace singpack
