#pragma once

#include <string>

#include "ips/lattice.hpp"

namespace ips {

struct SvgOptions {
    int width = 800;      // pixel width; height follows the aspect ratio
    bool labels = false;  // annotate each point with its lattice coordinates
};

// Deterministic SVG 1.1 figure: auto-scaled viewport with 5% margins, one
// filled circle per point, the line y = 0 drawn when at least three points
// lie on it. The only floating-point code in the library lives here.
std::string render_svg(const PointSet& S, const SvgOptions& options = {});

}  // namespace ips
