#pragma once

#include <cstdint>
#include <vector>

#include "engelset/errors.hpp"

namespace engelset {

// Periodic two-sided sequence (a_i), i in Z, of signed horizontal axis
// indices driving the layer construction. Represented by
//   abs_pattern: |a_1| .. |a_{d-1}|, a permutation of 1..d-1 (period d-1),
//   signs:       sign(a_1) .. sign(a_P), period P, P a multiple of d-1.
//
// The rules enforced at construction:
//   each |a_i| lies in {1, .., d-1},
//   |a_{i+d-1}| = |a_i|              (by the representation),
//   any d-1 consecutive |a_i| cover {1, .., d-1}  (abs_pattern is a permutation).
class ShiftSequence {
public:
    ShiftSequence(int d, std::vector<int> abs_pattern, std::vector<int> signs);

    int d() const { return d_; }
    int period() const { return static_cast<int>(signs_.size()); }
    const std::vector<int>& abs_pattern() const { return abs_pattern_; }
    const std::vector<int>& signs() const { return signs_; }

    // a_i for any integer i (1-based patterns, two-sided periodic extension).
    int term(std::int64_t i) const { return abs_term(i) * sign_term(i); }
    int abs_term(std::int64_t i) const { return abs_pattern_[mod_index(i, d_ - 1)]; }
    int sign_term(std::int64_t i) const { return signs_[mod_index(i, period())]; }

    // u_i = sign(a_i) e_{|a_i|}: the axis is 1-based.
    struct Unit {
        int axis;
        int sign;

        friend bool operator==(const Unit&, const Unit&) = default;
    };
    Unit shift_unit(std::int64_t i) const { return Unit{abs_term(i), sign_term(i)}; }

    friend bool operator==(const ShiftSequence& a, const ShiftSequence& b) = default;

private:
    static std::size_t mod_index(std::int64_t i, int n);

    int d_;
    std::vector<int> abs_pattern_;
    std::vector<int> signs_;
};

}  // namespace engelset
