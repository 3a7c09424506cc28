#include "linecurve/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace linecurve {

std::string svg_polylines(const std::vector<std::vector<Vec2>>& series,
                          const std::string& stroke) {
    std::size_t total = 0;
    for (const auto& s : series) total += s.size();
    if (series.empty() || total == 0)
        throw std::invalid_argument("svg_polylines: no points to draw");

    double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
    for (const auto& s : series)
        for (const auto& p : s) {
            xmin = std::fmin(xmin, p.x);
            xmax = std::fmax(xmax, p.x);
            ymin = std::fmin(ymin, p.y);
            ymax = std::fmax(ymax, p.y);
        }
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0.0) w = 1.0;
    if (h <= 0.0) h = 1.0;
    double mx = 0.05 * w, my = 0.05 * h;

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};
    std::ostringstream out;
    out.precision(10);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
        << "viewBox=\"" << xmin - mx << ' ' << ymin - my << ' ' << w + 2 * mx << ' '
        << h + 2 * my << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        if (series[k].empty()) continue;
        const std::string color = stroke.empty() ? kPalette[k % 6] : stroke;
        out << "  <polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"" << 0.004 * std::max(w, h) << "\" points=\"";
        for (const auto& p : series[k]) {
            // Flip about the horizontal midline: SVG y grows downward.
            out << p.x << ',' << (ymin + ymax) - p.y << ' ';
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace linecurve
