#pragma once

#include <optional>

#include "engelset/quadratic.hpp"
#include "engelset/sequence.hpp"

namespace engelset {

// Full parameter set for a layered construction: shift sequence, horizontal
// lattice half-spacing a, vertical half-spacing b (known through b^2), and
// shift length delta. Constraints: 0 < delta < a and a^2 < b^2.
//
// Uneven spacing (alternating 2b / 2b') is construction-only: it requires b
// and b' as exact rationals, and the analysis operations reject it.
class EngelParams {
public:
    EngelParams(ShiftSequence seq, Rational a, Rational b_sq, Rational delta);

    // Even spacing with b itself rational.
    static EngelParams with_b(ShiftSequence seq, Rational a, Rational b, Rational delta);

    // Alternating vertical gaps 2b (between layers 2i and 2i+1) and 2b'
    // (between layers 2i-1 and 2i); both must be rational to stay exact.
    static EngelParams uneven(ShiftSequence seq, Rational a, Rational b, Rational b_prime, Rational delta);

    int d() const { return seq_.d(); }
    const ShiftSequence& seq() const { return seq_; }
    const Rational& a() const { return a_; }
    const Rational& b_sq() const { return b_sq_; }
    const Rational& delta() const { return delta_; }

    bool uneven_spacing() const { return b_prime_.has_value(); }
    bool b_is_rational() const { return b_.has_value(); }
    const Rational& b_exact() const;        // requires b_is_rational()
    const Rational& b_prime_exact() const;  // requires uneven_spacing()

    // Vertical metric for SplitVector levels: vlevel * sqrt(unit_sq) is the
    // Euclidean vertical coordinate. Even spacing: unit_sq = b_sq and layer m
    // sits at vlevel 2m. Uneven: unit is a rational subdivision of both gaps.
    const Rational& unit_sq() const { return unit_sq_; }
    std::int64_t layer_vlevel(std::int64_t m) const;

    // vlevels added stepping from layer m-1 to layer m.
    std::int64_t vstep_into(std::int64_t m) const;

    // Throws on uneven spacing: no covering statement exists for it.
    Rational R_sq() const;
    Rational r() const { return a_; }

private:
    void validate() const;

    ShiftSequence seq_;
    Rational a_;
    Rational b_sq_;
    Rational delta_;
    std::optional<Rational> b_;
    std::optional<Rational> b_prime_;
    Rational unit_sq_;
    std::int64_t vstep_odd_ = 2;   // E3 steps (layer 2i -> 2i+1)
    std::int64_t vstep_even_ = 2;  // E4 steps (layer 2i-1 -> 2i)
};

struct DeloneRadii {
    Rational r;
    Rational R_sq;
};

// (r, R^2) = (a, b^2 + (d-1) a^2): packing and covering radii of the set.
DeloneRadii delone_radii(const EngelParams& params);

// Rejects uneven-spacing parameter sets for operations backed by the theory.
void require_even_spacing(const EngelParams& params, const char* operation);

}  // namespace engelset
