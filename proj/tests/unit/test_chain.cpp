#include <doctest.h>

#include <vector>

#include "engelset/chain.hpp"
#include "engelset/errors.hpp"
#include "engelset/presets.hpp"

using engelset::LayerWindow;
using engelset::Rational;
using engelset::SplitVector;

TEST_CASE("chain points climb the planar layers") {
    const auto params = engelset::planar_example();
    const auto x0 = engelset::layer_origin(params, 0);

    CHECK(engelset::chain_point(params, 0, x0, 0) == x0);

    const auto up2 = engelset::chain_point(params, 0, x0, 2);
    CHECK(up2.horiz[0] == Rational(1));
    CHECK(up2.vlevel == 4);

    const auto down1 = engelset::chain_point(params, 0, x0, -1);
    CHECK(down1 == engelset::layer_origin(params, -1));

    // the chain through a layer anchor is exactly the anchor sequence
    for (int j = -6; j <= 6; ++j) {
        CHECK(engelset::chain_point(params, 0, x0, j) == engelset::layer_origin(params, j));
    }
}

TEST_CASE("chain points climb the spatial layers") {
    const auto params = engelset::spatial_example();
    const auto x0 = engelset::layer_origin(params, 0);

    const auto up4 = engelset::chain_point(params, 0, x0, 4);
    CHECK(up4.horiz[0] == Rational(1));
    CHECK(up4.horiz[1] == Rational(1));
    CHECK(up4.vlevel == 8);

    // starting the chain higher re-indexes it without moving the points
    const auto x1 = engelset::layer_origin(params, 1);
    for (int j = -4; j <= 4; ++j) {
        CHECK(engelset::chain_point(params, 1, x1, j) == engelset::layer_origin(params, 1 + j));
    }
}

TEST_CASE("chains commute with horizontal lattice offsets") {
    const auto params = engelset::spatial_example();
    const auto o0 = engelset::layer_origin(params, 0);
    SplitVector x = o0;
    x.horiz[0] += Rational(16);
    x.horiz[1] += Rational(-8);
    for (int j = -5; j <= 5; ++j) {
        const auto moved = engelset::chain_point(params, 0, x, j);
        const auto base = engelset::chain_point(params, 0, o0, j);
        CHECK(moved.vlevel == base.vlevel);
        CHECK(moved.horiz - base.horiz == x.horiz - o0.horiz);
    }
}

TEST_CASE("chain rejects points that are not on the named layer") {
    const auto params = engelset::planar_example();
    SplitVector bad = engelset::layer_origin(params, 0);
    bad.vlevel = 1;
    CHECK_THROWS_AS(engelset::chain_point(params, 0, bad, 1), engelset::ValidationError);

    SplitVector off = engelset::layer_origin(params, 0);
    off.horiz[0] += Rational(3);  // not a multiple of 2a = 10
    CHECK_THROWS_AS(engelset::chain_point(params, 0, off, 1), engelset::ValidationError);

    // right coset, wrong layer index
    const auto o2 = engelset::layer_origin(params, 2);
    CHECK_THROWS_AS(engelset::chain_point(params, 0, o2, 1), engelset::ValidationError);
}

TEST_CASE("planar chain steps alternate 577 and 576") {
    const auto params = engelset::planar_example();
    const LayerWindow window = engelset::generate_window(params, -7, 7, 10);
    const auto x0 = engelset::layer_origin(params, 0);

    const auto profile = engelset::chain_profile(window, 0, x0, -6, 6);
    CHECK(profile.size() == 13u);
    for (const auto& step : profile) {
        const bool even_layer = ((step.j % 2) == 0);
        CHECK(step.back_sq == Rational(even_layer ? 577 : 576));
        CHECK(step.fwd_sq == Rational(even_layer ? 576 : 577));
        CHECK(step.unique_back);
        CHECK(step.unique_fwd);
    }
}

TEST_CASE("spatial chain steps alternate 197 and 196") {
    const auto params = engelset::spatial_example();
    const LayerWindow window = engelset::generate_window(params, -6, 6, 8);

    // run the chain from a non-anchor point of layer 1
    SplitVector x = engelset::layer_origin(params, 1);
    x.horiz[0] += Rational(8);
    x.horiz[1] += Rational(-16);

    const auto profile = engelset::chain_profile(window, 1, x, -4, 4);
    for (const auto& step : profile) {
        const std::int64_t layer = 1 + step.j;
        const bool even_layer = ((layer % 2) == 0);
        CHECK(step.back_sq == Rational(even_layer ? 197 : 196));
        CHECK(step.fwd_sq == Rational(even_layer ? 196 : 197));
        CHECK(step.unique_back);
        CHECK(step.unique_fwd);
    }
}

TEST_CASE("chain step distances and uniqueness match a brute-force scan") {
    const auto params = engelset::spatial_example();
    const LayerWindow window = engelset::generate_window(params, -5, 5, 6);
    const auto x0 = engelset::layer_origin(params, 0);

    const auto profile = engelset::chain_profile(window, 0, x0, -4, 4);
    for (const auto& step : profile) {
        const auto here = engelset::chain_point(params, 0, x0, step.j);
        const auto back = engelset::chain_point(params, 0, x0, step.j - 1);
        const auto fwd = engelset::chain_point(params, 0, x0, step.j + 1);
        CHECK(engelset::sq_dist(here, back, params.unit_sq()) == step.back_sq);
        CHECK(engelset::sq_dist(here, fwd, params.unit_sq()) == step.fwd_sq);

        // scan the whole layer: nothing beats or ties the chain point
        int closer_or_tied_back = 0;
        int closer_or_tied_fwd = 0;
        for (const auto& z : window.layer_points(step.j)) {
            if (z == here) continue;
            if (engelset::sq_dist(z, back, params.unit_sq()) <= step.back_sq) ++closer_or_tied_back;
            if (engelset::sq_dist(z, fwd, params.unit_sq()) <= step.fwd_sq) ++closer_or_tied_fwd;
        }
        CHECK(closer_or_tied_back == 0);
        CHECK(closer_or_tied_fwd == 0);
    }
}

TEST_CASE("chain certification demands an adequate window") {
    const auto params = engelset::planar_example();
    const auto x0 = engelset::layer_origin(params, 0);

    // chain would leave the covered layer range
    const LayerWindow narrow = engelset::generate_window(params, -2, 2, 6);
    CHECK_THROWS_AS(engelset::chain_profile(narrow, 0, x0, -3, 3), engelset::InsufficientWindowError);

    // horizontal margin too small around an offset start point
    const LayerWindow thin = engelset::generate_window(params, -3, 3, 1);
    SplitVector far = x0;
    far.horiz[0] += Rational(10);
    CHECK_THROWS_AS(engelset::chain_profile(thin, 0, far, -2, 2), engelset::InsufficientWindowError);
}
