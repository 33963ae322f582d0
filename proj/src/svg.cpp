#include "engelset/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "engelset/errors.hpp"

namespace engelset {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

}  // namespace

std::string window_svg(const LayerWindow& window, const std::vector<QuadRadius>& radii) {
    const EngelParams& params = window.params();
    if (params.d() > 3) {
        throw ValidationError("svg output supports d = 2 and d = 3 only");
    }

    const double vunit = std::sqrt(params.unit_sq().to_double());
    const auto project_x = [](const SplitVector& p) { return p.horiz[0].to_double(); };
    const auto project_y = [&](const SplitVector& p) {
        return -static_cast<double>(p.vlevel) * vunit;  // svg y axis points down
    };

    double max_r = 0.0;
    for (const QuadRadius& rho : radii) max_r = std::max(max_r, rho.to_double());

    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    bool first = true;
    window.for_each_point([&](std::int64_t, const SplitVector& p) {
        const double x = project_x(p);
        const double y = project_y(p);
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    });

    const double a = params.a().to_double();
    const double point_r = std::max(0.15 * a, 0.05);
    const double pad = max_r + 4.0 * point_r;
    min_x -= pad;
    max_x += pad;
    min_y -= pad;
    max_y += pad;
    const double span_x = std::max(max_x - min_x, 1.0);
    const double span_y = std::max(max_y - min_y, 1.0);
    const double width = 800.0;
    const double height = width * span_y / span_x;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"" << fmt(min_x) << ' ' << fmt(min_y)
        << ' ' << fmt(span_x) << ' ' << fmt(span_y) << "\">\n";
    out << "<style>\n.pt { fill: #333333; stroke: none; }\n";
    for (std::size_t i = 0; i < radii.size(); ++i) {
        out << ".rho" << i << " { fill: none; stroke: " << kPalette[i % kPaletteSize]
            << "; stroke-width: " << fmt(0.6 * point_r) << "; }\n";
    }
    out << "</style>\n";

    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double r = radii[i].to_double();
        out << "<g class=\"rho" << i << "\">\n";
        for (std::int64_t m = window.m_min(); m <= window.m_max(); ++m) {
            const SplitVector& o = window.origin(m);
            out << "<circle cx=\"" << fmt(project_x(o)) << "\" cy=\"" << fmt(project_y(o))
                << "\" r=\"" << fmt(r) << "\"/>\n";
        }
        out << "</g>\n";
    }

    out << "<g>\n";
    window.for_each_point([&](std::int64_t, const SplitVector& p) {
        out << "<circle class=\"pt\" cx=\"" << fmt(project_x(p)) << "\" cy=\""
            << fmt(project_y(p)) << "\" r=\"" << fmt(point_r) << "\"/>\n";
    });
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace engelset
