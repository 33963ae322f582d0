#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "engelset/counting.hpp"
#include "engelset/ortho_map.hpp"
#include "engelset/params.hpp"
#include "engelset/window.hpp"

namespace engelset {

// A shift sequence is regular when one sign tau flips every term across a
// step of d-1: a_{i+d-1} = tau * a_i for all i.
struct RegularityVerdict {
    bool regular = false;
    std::optional<int> tau;  // engaged iff regular
};

RegularityVerdict is_regular(const ShiftSequence& seq);

// u_d / u_1, defined because |a_d| = |a_1|. Any congruence of two layered
// sets transports the shift chain, so it must preserve this sign.
int kappa_invariant(const ShiftSequence& seq);

// One exact inequality with both sides kept in radical form for reporting.
struct HypothesisCheck {
    std::string name;
    std::string relation;  // "<" or "<="
    QuadRadius lhs;
    QuadRadius rhs;
    bool holds = false;
};

struct HypothesisReport {
    Rational eps;
    std::vector<HypothesisCheck> checks;

    bool all_hold() const;
};

// The exact conditions behind the single-class radius 2dR - eps:
//   (i) a < b, (ii) 2dR - eps < 2db, (iii) a^2 <= eps*b/(d(d-1)).
// Failures are reported, never corrected; eps must be positive.
HypothesisReport onecluster_hypothesis(const EngelParams& params, const Rational& eps);

// Symmetry group predicted for the radius-2kR cluster at layer p: every sign
// change and permutation of the horizontal axes not consumed by the links
// reachable within k layers. Valid under the radius condition 2kR < 2b(k+1).
struct GroupPrediction {
    int k = 0;
    bool applicable = false;       // 2kR < 2b(k+1), exact
    bool sufficient_form = false;  // a^2 < 2b^2/(k(d-1)), exact
    QuadRadius radius;             // 2kR
    QuadRadius radius_bound;       // 2b(k+1)
    std::vector<int> free_axes;    // 1-based horizontal axes, ascending
    std::uint64_t predicted_order = 1;
    std::vector<OrthoMap> generators;
};

GroupPrediction predict_group(const EngelParams& params, int k, std::int64_t p);

// Parameter synthesis for a target circumradius: halve a starting from the
// rational floor of R/(2 sqrt d) until a < b, 2dR - eps < 2db and the strict
// form a^2 < eps*b/(d(d-1)) all hold; b_sq = R_sq - (d-1)a^2 keeps R exact
// and delta = a/2 stays clear of both degeneracies. The sign pattern is the
// canonical non-regular one: 2(d-1) plus terms followed by d-1 minus terms.
EngelParams choose_parameters(int d, const Rational& R_sq, const Rational& eps);

// Minimum pairwise squared distance over the window, expected (2a)^2.
struct PackingReport {
    bool ok = false;
    std::optional<Rational> min_sq;  // engaged when the window has >= 2 points
    std::optional<std::pair<SplitVector, SplitVector>> closest;
};

PackingReport verify_packing(const LayerWindow& window, const Rational& r_sq);

// Exact squared distance from the query (horiz, w * sqrt(unit_sq)) to the
// nearest window point. Window margins must enclose the query's reach ball,
// so a result <= reach_sq is the true nearest over the whole set; throws
// InsufficientWindowError otherwise.
Rational nearest_sq(const LayerWindow& window, const HVector& horiz, const Rational& w,
                    const Rational& reach_sq);

struct CoveringReport {
    std::uint64_t samples = 0;
    bool ok = false;        // every sample within sqrt(R_sq) of a window point
    Rational max_nearest_sq;
    bool sharp_ok = false;  // deep hole at offset (a,..,a), height b: exactly R^2
    Rational sharp_sq;
};

// Sampled covering check plus the deterministic deep-hole certificate. The
// samples are pseudo-random rational points drawn from the region that stays
// inside the window margins by R; the seed fixes them completely.
CoveringReport verify_covering(const LayerWindow& window, const Rational& R_sq,
                               std::uint64_t n_samples, std::uint64_t seed);

// Regularity is equivalent to a single cluster class at radius 2dR; this
// runs both sides and reports whether they agree.
struct EquivalenceCheckReport {
    RegularityVerdict verdict;
    int n_at_2dR = 0;
    bool consistent = false;
    ClassReport classes;
};

EquivalenceCheckReport enreg_check(const EngelParams& params,
                                   std::uint64_t max_points = default_point_cap());

// The two regular completions of the base sequence's first d-1 terms, with
// the sign invariant that separates them.
struct TwoRegularReport {
    EngelParams plus;
    EngelParams minus;
    RegularityVerdict plus_verdict;
    RegularityVerdict minus_verdict;
    int kappa_plus = 0;
    int kappa_minus = 0;
    bool distinct = false;
};

TwoRegularReport two_regular_distinct(const EngelParams& base);

}  // namespace engelset
