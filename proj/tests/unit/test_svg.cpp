#include <doctest.h>

#include <string>
#include <vector>

#include "engelset/errors.hpp"
#include "engelset/presets.hpp"
#include "engelset/svg.hpp"

using engelset::QuadRadius;
using engelset::Rational;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("planar figure with two circle families") {
    const auto window = engelset::generate_window(engelset::planar_example(), -2, 2, 3);
    const std::vector<QuadRadius> radii = {QuadRadius(Rational(48)), QuadRadius(Rational(52))};
    const std::string svg = engelset::window_svg(window, radii);

    CHECK(svg.find("<?xml version=\"1.0\"") == 0);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);

    // 5 layers x 7 offsets scatter points, one circle per origin per radius
    CHECK(count_occurrences(svg, "<circle class=\"pt\"") == 35);
    CHECK(count_occurrences(svg, "<g class=\"rho0\">") == 1);
    CHECK(count_occurrences(svg, "<g class=\"rho1\">") == 1);
    CHECK(count_occurrences(svg, "r=\"48.0000\"") == 5);
    CHECK(count_occurrences(svg, "r=\"52.0000\"") == 5);

    // identical inputs, identical bytes
    CHECK(engelset::window_svg(window, radii) == svg);
}

TEST_CASE("plain scatter without radii") {
    const auto window = engelset::generate_window(engelset::planar_example(), 0, 1, 1);
    const std::string svg = engelset::window_svg(window, {});
    CHECK(count_occurrences(svg, "<circle class=\"pt\"") == 6);
    CHECK(svg.find("rho0") == std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("spatial figure projects onto first axis and height") {
    const auto window = engelset::generate_window(engelset::spatial_example(), 0, 1, 1);
    const std::string svg = engelset::window_svg(window, {QuadRadius(Rational(18))});
    CHECK(count_occurrences(svg, "<circle class=\"pt\"") == 2 * 9);
    // layer 1 sits at height 2 sqrt(49) = 14, negated by the y flip
    CHECK(svg.find("cy=\"-14.0000\"") != std::string::npos);
    CHECK(count_occurrences(svg, "r=\"18.0000\"") == 2);
}

TEST_CASE("figure output rejects high dimension") {
    const auto window = engelset::generate_window(engelset::d4_example(), 0, 0, 0);
    CHECK_THROWS_AS(engelset::window_svg(window, {}), engelset::ValidationError);
}
