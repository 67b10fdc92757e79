#include "schroder/render.hpp"

#include <sstream>
#include <stdexcept>

namespace schroder {

std::string render_svg(const TwoColoredDyckPath& path, const RenderOptions& options) {
    const int n = path.size();
    const int cell = options.cell;
    if (cell <= 0) throw std::invalid_argument("render_svg: cell size must be positive");
    if (!options.labels.empty() && static_cast<int>(options.labels.size()) != n)
        throw std::invalid_argument("render_svg: need one label per east step");
    const int margin = cell;
    const int side = n * cell + 2 * margin;
    // Lattice (x, y) to pixels, with y pointing up.
    auto px = [&](double x) { return margin + x * cell; };
    auto py = [&](double y) { return margin + (n - y) * cell; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
       << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int k = 0; k <= n; ++k) {
        os << "<line x1=\"" << px(k) << "\" y1=\"" << py(0) << "\" x2=\"" << px(k) << "\" y2=\"" << py(n) << "\"/>\n";
        os << "<line x1=\"" << px(0) << "\" y1=\"" << py(k) << "\" x2=\"" << px(n) << "\" y2=\"" << py(k) << "\"/>\n";
    }
    os << "</g>\n";

    if (options.lines) {
        os << "<g stroke=\"#3b6fd8\" stroke-width=\"2\" stroke-dasharray=\"6 4\">\n";
        for (const auto& line : lines_of(path)) {
            os << "<line x1=\"" << px(line.x_lo) << "\" y1=\"" << py(line.x_lo - line.offset) << "\" x2=\""
               << px(line.x_hi) << "\" y2=\"" << py(line.x_hi - line.offset) << "\"/>\n";
        }
        os << "</g>\n";
    } else {
        os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(n) << "\" y2=\"" << py(n)
           << "\" stroke=\"#3b6fd8\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
    }

    os << "<g stroke-width=\"4\" stroke-linecap=\"round\">\n";
    int y = 0;
    for (int i = 1; i <= n; ++i) {
        const int h = path.height(i);
        if (h != y)
            os << "<line x1=\"" << px(i - 1) << "\" y1=\"" << py(y) << "\" x2=\"" << px(i - 1) << "\" y2=\"" << py(h)
               << "\" stroke=\"#555555\"/>\n";
        os << "<line x1=\"" << px(i - 1) << "\" y1=\"" << py(h) << "\" x2=\"" << px(i) << "\" y2=\"" << py(h)
           << "\" stroke=\"" << (path.is_red(i) ? "#d62728" : "black") << "\"/>\n";
        y = h;
    }
    if (n > 0 && y != n)
        os << "<line x1=\"" << px(n) << "\" y1=\"" << py(y) << "\" x2=\"" << px(n) << "\" y2=\"" << py(n)
           << "\" stroke=\"#555555\"/>\n";
    os << "</g>\n";

    if (!options.labels.empty()) {
        os << "<g font-family=\"sans-serif\" font-size=\"" << cell / 2 << "\" text-anchor=\"middle\">\n";
        for (int i = 1; i <= n; ++i)
            os << "<text x=\"" << px(i - 0.5) << "\" y=\"" << py(path.height(i)) - 6 << "\">"
               << options.labels[static_cast<std::size_t>(i - 1)] << "</text>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace schroder
