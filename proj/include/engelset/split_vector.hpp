#pragma once

#include <cstdint>
#include <iosfwd>

#include "engelset/eigen_support.hpp"
#include "engelset/quadratic.hpp"

namespace engelset {

// Point of a layered set in split representation: d-1 rational horizontal
// coordinates plus an integer vertical level. The Euclidean vertical
// coordinate is vlevel * sqrt(unit_sq); only unit_sq (typically b^2) needs
// to be rational, so every squared distance below is exact.
struct SplitVector {
    HVector horiz;
    std::int64_t vlevel = 0;

    SplitVector() = default;
    SplitVector(HVector h, std::int64_t v) : horiz(std::move(h)), vlevel(v) {}

    int dim() const { return static_cast<int>(horiz.size()) + 1; }
};

// Sample point with a rational vertical level (in the same sqrt(unit_sq)
// units). Set points always sit at integer levels; covering probes may not.
struct SamplePoint {
    HVector horiz;
    Rational vlevel;
};

bool operator==(const SplitVector& a, const SplitVector& b);
bool operator!=(const SplitVector& a, const SplitVector& b);

// Lexicographic order: vlevel first, then horizontal coordinates.
// A total order; used for canonical point lists and set membership.
int cmp_lex(const SplitVector& a, const SplitVector& b);

// Exact squared Euclidean distance / inner product under the split metric.
template <typename DerivedA, typename DerivedB>
Rational horiz_dot(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    return a.dot(b);
}

Rational sq_dist(const SplitVector& x, const SplitVector& y, const Rational& unit_sq);
Rational sq_dist(const SamplePoint& x, const SplitVector& y, const Rational& unit_sq);
Rational dot(const SplitVector& x, const SplitVector& y, const Rational& unit_sq);
Rational sq_norm(const SplitVector& x, const Rational& unit_sq);

SplitVector operator+(const SplitVector& a, const SplitVector& b);
SplitVector operator-(const SplitVector& a, const SplitVector& b);

std::ostream& operator<<(std::ostream& os, const SplitVector& x);

}  // namespace engelset
