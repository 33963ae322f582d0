#include "engelset/onedim.hpp"

#include <algorithm>
#include <cstddef>

#include "engelset/errors.hpp"

namespace engelset {

std::vector<Rational> LineSet::gaps() const {
    std::vector<Rational> out;
    if (points.size() < 2) return out;
    out.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        out.push_back(points[i] - points[i - 1]);
    }
    return out;
}

namespace {

// Accumulates points from 0 with the given gaps, then translates the point
// at center_index to the origin.
LineSet from_gaps(const std::vector<Rational>& gaps, std::size_t center_index) {
    LineSet set;
    set.points.reserve(gaps.size() + 1);
    Rational x(0);
    set.points.push_back(x);
    for (const Rational& g : gaps) {
        x = x + g;
        set.points.push_back(x);
    }
    const Rational shift = set.points[center_index];
    for (Rational& p : set.points) p = p - shift;
    return set;
}

}  // namespace

LineSet make_ab_set(const Rational& a, const Rational& b, int n) {
    if (!(Rational(0) < a) || b < a) {
        throw ValidationError("ab set needs 0 < a <= b");
    }
    if (n < 0) {
        throw ValidationError("ab set needs n >= 0");
    }
    std::vector<Rational> gaps;
    gaps.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        gaps.push_back(a);
        gaps.push_back(b);
    }
    return from_gaps(gaps, static_cast<std::size_t>(n));
}

LineSet make_1d_counterexample(const Rational& rho, const Rational& R, int n) {
    const Rational two_R = Rational(2) * R;
    if (!(Rational(0) < rho) || !(rho < two_R)) {
        throw ValidationError("counterexample needs 0 < rho < 2R");
    }
    if (n < 0) {
        throw ValidationError("counterexample needs n >= 0");
    }
    const Rational span = two_R - rho;
    std::vector<Rational> gaps;
    gaps.reserve(2 * static_cast<std::size_t>(n) + 1);
    gaps.push_back(rho);
    for (int k = 0; k < n; ++k) {
        gaps.push_back(rho + span * Rational(k + 1) / Rational(k + 3));
        gaps.push_back(rho);
    }
    return from_gaps(gaps, static_cast<std::size_t>(n));
}

namespace {

// Signed offsets q - p for every other point q with |q - p| <= rho,
// in increasing order.
std::vector<Rational> offsets_within(const LineSet& set, std::size_t i, const Rational& rho) {
    std::vector<Rational> out;
    const Rational& p = set.points[i];
    for (std::size_t j = 0; j < set.points.size(); ++j) {
        if (j == i) continue;
        const Rational off = set.points[j] - p;
        const Rational dist = off < Rational(0) ? -off : off;
        if (!(rho < dist)) out.push_back(off);
    }
    return out;
}

bool offsets_congruent(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
    if (lhs.size() != rhs.size()) return false;
    if (lhs == rhs) return true;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!(lhs[i] == -rhs[rhs.size() - 1 - i])) return false;
    }
    return true;
}

}  // namespace

bool line_clusters_equal(const LineSet& set, const Rational& rho) {
    if (!(Rational(0) < rho)) {
        throw ValidationError("cluster radius must be positive");
    }
    if (set.points.empty()) {
        throw InsufficientWindowError("empty line set has no interior points");
    }
    for (std::size_t i = 1; i < set.points.size(); ++i) {
        if (!(set.points[i - 1] < set.points[i])) {
            throw ValidationError("line set points must be strictly increasing");
        }
    }
    const Rational lo = set.points.front();
    const Rational hi = set.points.back();
    std::vector<Rational> base;
    bool have_base = false;
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        const Rational& p = set.points[i];
        if (p - rho < lo || hi < p + rho) continue;
        std::vector<Rational> offs = offsets_within(set, i, rho);
        if (!have_base) {
            base = std::move(offs);
            have_base = true;
        } else if (!offsets_congruent(base, offs)) {
            return false;
        }
    }
    if (!have_base) {
        throw InsufficientWindowError("no point has margin rho = " + rho.str() +
                                      " inside the window");
    }
    return true;
}

}  // namespace engelset
