#pragma once

#include "engelset/params.hpp"

namespace engelset {

// Planar worked instance: d = 2, signs (+, +, -) with period 3,
// a = 5, b = 12, delta = 1. Not regular.
inline EngelParams planar_example() {
    return EngelParams(ShiftSequence(2, {1}, {+1, +1, -1}), Rational(5), Rational(144), Rational(1));
}

// Spatial worked instance: d = 3, |a_i| alternating 1, 2, signs (+, +, -, +)
// with period 4, a = 4, b = 7, delta = 1. Not regular.
inline EngelParams spatial_example() {
    return EngelParams(ShiftSequence(3, {1, 2}, {+1, +1, -1, +1}), Rational(4), Rational(49), Rational(1));
}

// Four-dimensional instance with the all-plus (regular, tau = +1) sequence:
// a = 1, b = 10, delta = 1/2.
inline EngelParams d4_example() {
    return EngelParams(ShiftSequence(4, {1, 2, 3}, {+1, +1, +1}), Rational(1), Rational(100), Rational(1, 2));
}

}  // namespace engelset
