#pragma once

#include "schroder/outline.hpp"

#include <string>
#include <vector>

namespace schroder {

struct RenderOptions {
    int cell = 36;  ///< pixels per lattice unit
    bool lines = true;
    /// Optional labels written above the east steps, e.g. the letters of psi(e).
    std::vector<int> labels;
};

/// Static SVG of the path, the diagonal y = x and, optionally, its diagonal lines.
std::string render_svg(const TwoColoredDyckPath& path, const RenderOptions& options = {});

}  // namespace schroder
