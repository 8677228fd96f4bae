#ifndef GEOCYCLE_SVG_HPP
#define GEOCYCLE_SVG_HPP

#include <optional>
#include <string>

#include "geocycle/hom.hpp"

namespace geocycle {

// Straight-line rendering; crossing edges highlighted. `overlay` labels
// each vertex with its image under a certificate map (target vertex ids).
struct SvgOptions {
    double size = 480.0;
    std::optional<std::vector<std::string>> overlay;  // one label per vertex
};

std::string render_svg(const GeometricGraph& g, const SvgOptions& options = {});

} // namespace geocycle

#endif
