#include <doctest.h>

#include <map>
#include <vector>

#include "engelset/cluster.hpp"
#include "engelset/errors.hpp"
#include "engelset/presets.hpp"

using engelset::Cluster;
using engelset::LayerWindow;
using engelset::QuadRadius;
using engelset::Rational;
using engelset::SplitVector;

namespace {

std::map<std::int64_t, int> points_per_level(const Cluster& c) {
    std::map<std::int64_t, int> out;
    for (const auto& p : c.rel) out[p.vlevel]++;
    return out;
}

int count_at_sq(const Cluster& c, const Rational& sq) {
    int n = 0;
    for (const auto& s : c.rel_sq) {
        if (s == sq) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("planar ball of radius 26 around the base anchor") {
    const auto params = engelset::planar_example();
    const auto spec = engelset::required_window(params, 0, Rational(26 * 26));
    const auto window = engelset::generate_window(params, spec);
    const auto c = engelset::extract_cluster(window, engelset::layer_origin(params, 0), Rational(26 * 26));

    CHECK(c.size() == 9u);                     // ten points counting the center
    CHECK(count_at_sq(c, Rational(676)) == 2);  // closed ball keeps the two boundary points

    const auto levels = points_per_level(c);
    CHECK(levels.at(0) == 4);
    CHECK(levels.at(2) == 3);
    CHECK(levels.at(-2) == 2);

    // canonical order is nondecreasing in squared norm
    for (std::size_t i = 1; i < c.rel_sq.size(); ++i) CHECK(c.rel_sq[i - 1] <= c.rel_sq[i]);
    // distance classes partition the list
    std::size_t covered = 0;
    for (const auto& [b, e] : c.dist_classes) {
        CHECK(b == covered);
        covered = e;
    }
    CHECK(covered == c.size());
    CHECK(c.dist_classes.size() == 6u);
}

TEST_CASE("below twice the packing radius the ball holds only its center") {
    const auto params = engelset::planar_example();
    const auto spec = engelset::required_window(params, 2, Rational(81));
    const auto window = engelset::generate_window(params, spec);
    const auto c = engelset::extract_cluster(window, engelset::layer_origin(params, 2), Rational(81));
    CHECK(c.size() == 0u);
    CHECK(c.dist_classes.empty());
}

TEST_CASE("spatial ball of radius 18 around the base anchor") {
    const auto params = engelset::spatial_example();
    const auto spec = engelset::required_window(params, 0, Rational(18 * 18));
    const auto window = engelset::generate_window(params, spec);
    const auto c = engelset::extract_cluster(window, engelset::layer_origin(params, 0), Rational(18 * 18));

    CHECK(c.size() == 36u);
    const auto levels = points_per_level(c);
    CHECK(levels.at(0) == 20);
    CHECK(levels.at(2) == 9);
    CHECK(levels.at(-2) == 7);

    // the four nearest in-layer neighbors are present
    int axis_neighbors = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.rel[i].vlevel == 0 && c.rel_sq[i] == Rational(64)) ++axis_neighbors;
    }
    CHECK(axis_neighbors == 4);

    // boundary points at exactly 18 are kept
    CHECK(count_at_sq(c, Rational(324)) == 4);
}

TEST_CASE("extraction is independent of window padding") {
    const auto params = engelset::spatial_example();
    const auto rho_sq = Rational(18 * 18);
    const auto spec = engelset::required_window(params, 0, rho_sq);
    const auto tight = engelset::generate_window(params, spec);
    const auto padded =
        engelset::generate_window(params, spec.m_min - 2, spec.m_max + 2, spec.L + 3);
    const auto center = engelset::layer_origin(params, 0);

    const auto a = engelset::extract_cluster(tight, center, rho_sq);
    const auto b = engelset::extract_cluster(padded, center, rho_sq);
    CHECK(a.rel == b.rel);
    CHECK(a.rel_sq == b.rel_sq);
    CHECK(a.dist_classes == b.dist_classes);
}

TEST_CASE("extraction matches the generic point-list path") {
    const auto params = engelset::planar_example();
    const auto spec = engelset::required_window(params, 1, Rational(26 * 26));
    const auto window = engelset::generate_window(params, spec);
    const auto center = engelset::layer_origin(params, 1);

    std::vector<SplitVector> universe;
    window.for_each_point([&](std::int64_t, const SplitVector& p) { universe.push_back(p); });

    const auto a = engelset::extract_cluster(window, center, Rational(26 * 26));
    const auto b = engelset::cluster_from_points(universe, center, Rational(26 * 26), params.unit_sq());
    CHECK(a.rel == b.rel);
    CHECK(a.rel_sq == b.rel_sq);
}

TEST_CASE("a symbolic radius equal to a rational one extracts the same ball") {
    // with R = 13 the symbolic 2dR - eps at eps=4 collapses to exactly 48
    const auto params = engelset::planar_example();
    const QuadRadius rho = engelset::two_dR_minus_eps(2, params.R_sq(), Rational(4));
    const QuadRadius rho_sq = rho.squared();
    const auto spec = engelset::required_window(params, 0, rho_sq);
    const auto window = engelset::generate_window(params, spec);
    const auto center = engelset::layer_origin(params, 0);

    const auto sym = engelset::extract_cluster(window, center, rho_sq);
    const auto plain_spec = engelset::required_window(params, 0, Rational(48 * 48));
    const auto plain =
        engelset::extract_cluster(engelset::generate_window(params, plain_spec), center, Rational(48 * 48));
    CHECK(sym.rel == plain.rel);
    CHECK(sym.size() == 26u);
}

TEST_CASE("extraction refuses windows that cannot contain the ball") {
    const auto params = engelset::planar_example();
    const auto center = engelset::layer_origin(params, 0);

    // radius 48 reaches layers +-2 exactly; a +-1 window must refuse
    const auto narrow = engelset::generate_window(params, -1, 1, 10);
    CHECK_THROWS_AS(engelset::extract_cluster(narrow, center, Rational(48 * 48)),
                    engelset::InsufficientWindowError);

    // wide enough vertically but horizontally too thin
    const auto thin = engelset::generate_window(params, -1, 1, 2);
    CHECK_THROWS_AS(engelset::extract_cluster(thin, center, Rational(26 * 26)),
                    engelset::InsufficientWindowError);
}

TEST_CASE("extraction validates the center") {
    const auto params = engelset::planar_example();
    const auto window = engelset::generate_window(params, -2, 2, 6);

    SplitVector off = engelset::layer_origin(params, 0);
    off.horiz[0] += Rational(3);
    CHECK_THROWS_AS(engelset::extract_cluster(window, off, Rational(100)), engelset::ValidationError);

    SplitVector wrong_level = engelset::layer_origin(params, 0);
    wrong_level.vlevel = 14;  // no layer of this window sits at level 14
    CHECK_THROWS_AS(engelset::extract_cluster(window, wrong_level, Rational(100)),
                    engelset::ValidationError);

    CHECK_THROWS_AS(engelset::extract_cluster(window, engelset::layer_origin(params, 0), Rational(-4)),
                    engelset::ValidationError);
}
