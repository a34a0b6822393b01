#include "carc/svg.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace carc {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Point {
    double x;
    double y;
};

// Marker 1 at twelve o'clock, increasing clockwise.
Point on_circle(double centre, double radius, double marker, int n) {
    const double angle = 2.0 * std::numbers::pi * (marker - 1.0) / n - std::numbers::pi / 2.0;
    return {centre + radius * std::cos(angle), centre + radius * std::sin(angle)};
}

} // namespace

std::string render_svg(const RPartiteGraph& g, const ArcModel& m) {
    const int n = std::max(1, m.n_positions);
    const int count = m.vertex_count();
    const double clock_radius = 80.0;
    const double band = 14.0;
    const double size = 2.0 * (clock_radius + band * (count + 2) + 20.0);
    const double c = size / 2.0;

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << clock_radius
       << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    for (int p = 1; p <= n; ++p) {
        const Point tick = on_circle(c, clock_radius, p, n);
        const Point label = on_circle(c, clock_radius - 14.0, p, n);
        os << "<circle cx=\"" << tick.x << "\" cy=\"" << tick.y << "\" r=\"2.5\" fill=\"#000\"/>\n";
        os << "<text x=\"" << label.x << "\" y=\"" << label.y
           << "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << p
           << "</text>\n";
    }

    for (int v = 1; v <= count; ++v) {
        const auto& a = m.arc(v);
        const double radius = clock_radius + band * v;
        const int part = v <= g.order() ? g.part(v) : 1;
        const char* colour = kPalette[(part - 1) % std::size(kPalette)];
        const int span = ((a.end - a.start) % n + n) % n;
        const double from = a.start - 0.3;
        const double to = a.start + span + 0.3;
        const Point p0 = on_circle(c, radius, from, n);
        const Point p1 = on_circle(c, radius, to, n);
        const bool large = (to - from) / n > 0.5;
        os << "<path d=\"M " << p0.x << " " << p0.y << " A " << radius << " " << radius
           << " 0 " << (large ? 1 : 0) << " 1 " << p1.x << " " << p1.y << "\" fill=\"none\" stroke=\""
           << colour << "\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n";
        const Point tag = on_circle(c, radius, to + 0.25, n);
        os << "<text x=\"" << tag.x << "\" y=\"" << tag.y
           << "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">v" << v
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace carc
