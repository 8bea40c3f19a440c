#include "ips/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ips {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const PointSet& S, const SvgOptions& options) {
    if (S.size() == 0) throw Error("render_svg: empty set");
    const double p = S.lattice().p.convert_to<double>();
    const double q = S.lattice().q.convert_to<double>();
    const double sqrt_p = std::sqrt(p);

    std::vector<std::pair<double, double>> pts;
    pts.reserve(S.size());
    std::size_t on_axis = 0;
    for (const LatticePoint& pt : S.points()) {
        double px = pt.x.convert_to<double>() / q;
        double py = pt.y.convert_to<double>() * sqrt_p / q;
        pts.emplace_back(px, py);
        if (pt.y == 0) ++on_axis;
    }

    double min_x = pts[0].first, max_x = pts[0].first;
    double min_y = pts[0].second, max_y = pts[0].second;
    for (const auto& [x, y] : pts) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    double span_x = max_x - min_x;
    double span_y = max_y - min_y;
    if (span_x <= 0) span_x = 1.0;
    if (span_y <= 0) span_y = 1.0;
    const double margin_x = span_x * 0.05;
    const double margin_y = span_y * 0.05;
    min_x -= margin_x;
    max_x += margin_x;
    min_y -= margin_y;
    max_y += margin_y;

    const double width = options.width;
    const double scale = width / (max_x - min_x);
    const double height = (max_y - min_y) * scale;
    const double radius = width * 0.008;

    auto sx = [&](double x) { return (x - min_x) * scale; };
    auto sy = [&](double y) { return (max_y - y) * scale; };  // toward screen-down

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
       << "\">\n";
    if (on_axis >= 3 && 0.0 >= min_y && 0.0 <= max_y)
        os << "  <line x1=\"0\" y1=\"" << fmt(sy(0.0)) << "\" x2=\"" << fmt(width) << "\" y2=\""
           << fmt(sy(0.0)) << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << "  <circle cx=\"" << fmt(sx(pts[i].first)) << "\" cy=\"" << fmt(sy(pts[i].second))
           << "\" r=\"" << fmt(radius) << "\" fill=\"#1f4e99\"/>\n";
        if (options.labels) {
            const LatticePoint& pt = S[i];
            os << "  <text x=\"" << fmt(sx(pts[i].first) + radius * 1.5) << "\" y=\""
               << fmt(sy(pts[i].second) - radius * 1.5) << "\" font-size=\"" << fmt(radius * 3)
               << "\">(" << pt.x << "; " << pt.y << ")</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ips
