#pragma once

#include <vector>

#include "engelset/rational.hpp"

namespace engelset {

// Finite strictly increasing point set on the line.
struct LineSet {
    std::vector<Rational> points;

    std::vector<Rational> gaps() const;
};

// 2n+1 points whose gaps alternate a, b, a, b from left to right, translated
// so the middle point sits at the origin. Delone with r = a/2, R = b/2.
LineSet make_ab_set(const Rational& a, const Rational& b, int n);

// 2n+2 points whose gaps alternate between rho and the free values
//   g_k = rho + (2R - rho) * (k+1)/(k+3),   k = 0 .. n-1,
// each strictly between rho and 2R and pairwise distinct. Every point pairs
// with exactly one neighbor at distance rho, so all rho-clusters agree, yet
// the distinct free gaps rule out any global regularity.
LineSet make_1d_counterexample(const Rational& rho, const Rational& R, int n);

// True iff all rho-clusters of interior points (margin rho on both sides)
// agree up to translation and reflection. On the line that congruence test
// is exactly: equal signed-offset lists, or one equal to the other reversed
// and negated. Throws when no point has the required margin.
bool line_clusters_equal(const LineSet& set, const Rational& rho);

}  // namespace engelset
