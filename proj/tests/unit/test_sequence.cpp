#include <doctest.h>

#include "engelset/errors.hpp"
#include "engelset/presets.hpp"
#include "engelset/sequence.hpp"

using engelset::ShiftSequence;
using engelset::ValidationError;

TEST_CASE("planar sequence repeats with period 3 in both directions") {
    const ShiftSequence seq(2, {1}, {+1, +1, -1});
    CHECK(seq.period() == 3);

    CHECK(seq.term(1) == 1);
    CHECK(seq.term(2) == 1);
    CHECK(seq.term(3) == -1);
    CHECK(seq.term(4) == 1);
    CHECK(seq.term(0) == -1);
    CHECK(seq.term(-1) == 1);
    CHECK(seq.term(-2) == 1);
    CHECK(seq.term(-3) == -1);

    for (int i = -20; i <= 20; ++i) {
        CHECK(seq.term(i) == seq.term(i + 3));
        CHECK(seq.abs_term(i) == 1);
    }
}

TEST_CASE("spatial sequence alternates axes 1,2 under a period-4 sign word") {
    const ShiftSequence seq(3, {1, 2}, {+1, +1, -1, +1});
    CHECK(seq.period() == 4);

    const int expected_terms[8] = {1, 2, -1, 2, 1, 2, -1, 2};
    for (int i = 1; i <= 8; ++i) {
        CHECK(seq.term(i) == expected_terms[i - 1]);
    }
    CHECK(seq.term(0) == 2);
    CHECK(seq.term(-1) == -1);

    CHECK(seq.shift_unit(2).axis == 2);
    CHECK(seq.shift_unit(2).sign == 1);
    CHECK(seq.shift_unit(3).axis == 1);
    CHECK(seq.shift_unit(3).sign == -1);
    for (int i = -10; i <= 10; ++i) {
        CHECK(seq.shift_unit(i) == seq.shift_unit(i + 4));
        CHECK(seq.shift_unit(i).axis == seq.abs_term(i));
    }
}

TEST_CASE("sequence validation rejects malformed input") {
    CHECK_THROWS_AS(ShiftSequence(1, {}, {+1}), ValidationError);
    CHECK_THROWS_AS(ShiftSequence(2, {2}, {+1}), ValidationError);
    CHECK_THROWS_AS(ShiftSequence(3, {1, 1}, {+1, +1}), ValidationError);
    CHECK_THROWS_AS(ShiftSequence(3, {1, 2, 3}, {+1, +1}), ValidationError);
    CHECK_THROWS_AS(ShiftSequence(3, {1, 2}, {+1, 0}), ValidationError);
    CHECK_THROWS_AS(ShiftSequence(3, {1, 2}, {}), ValidationError);
    CHECK_THROWS_AS(ShiftSequence(3, {1, 2}, {+1, +1, -1}), ValidationError);
}

TEST_CASE("preset parameter sets validate and expose their radii") {
    const auto planar = engelset::planar_example();
    CHECK(planar.d() == 2);
    CHECK(planar.a() == engelset::Rational(5));
    CHECK(planar.b_sq() == engelset::Rational(144));
    CHECK(planar.R_sq() == engelset::Rational(169));
    CHECK(planar.r() == engelset::Rational(5));

    const auto spatial = engelset::spatial_example();
    CHECK(spatial.d() == 3);
    CHECK(spatial.R_sq() == engelset::Rational(81));
    CHECK(spatial.r() == engelset::Rational(4));

    const auto big = engelset::d4_example();
    CHECK(big.d() == 4);
    CHECK(big.R_sq() == engelset::Rational(103));
    CHECK(big.delta() == engelset::Rational(1, 2));
}
