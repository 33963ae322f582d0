#include "engelset/split_vector.hpp"

#include <ostream>

namespace engelset {

bool operator==(const SplitVector& a, const SplitVector& b) {
    if (a.vlevel != b.vlevel || a.horiz.size() != b.horiz.size()) return false;
    for (Eigen::Index i = 0; i < a.horiz.size(); ++i)
        if (!(a.horiz[i] == b.horiz[i])) return false;
    return true;
}

bool operator!=(const SplitVector& a, const SplitVector& b) { return !(a == b); }

int cmp_lex(const SplitVector& a, const SplitVector& b) {
    if (a.vlevel != b.vlevel) return a.vlevel < b.vlevel ? -1 : 1;
    if (a.horiz.size() != b.horiz.size()) return a.horiz.size() < b.horiz.size() ? -1 : 1;
    for (Eigen::Index i = 0; i < a.horiz.size(); ++i) {
        const auto c = a.horiz[i] <=> b.horiz[i];
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

Rational sq_dist(const SplitVector& x, const SplitVector& y, const Rational& unit_sq) {
    const HVector diff = x.horiz - y.horiz;
    const Rational dl(x.vlevel - y.vlevel);
    return diff.dot(diff) + dl * dl * unit_sq;
}

Rational sq_dist(const SamplePoint& x, const SplitVector& y, const Rational& unit_sq) {
    const HVector diff = x.horiz - y.horiz;
    const Rational dl = x.vlevel - Rational(y.vlevel);
    return diff.dot(diff) + dl * dl * unit_sq;
}

Rational dot(const SplitVector& x, const SplitVector& y, const Rational& unit_sq) {
    return x.horiz.dot(y.horiz) + Rational(x.vlevel) * Rational(y.vlevel) * unit_sq;
}

Rational sq_norm(const SplitVector& x, const Rational& unit_sq) { return dot(x, x, unit_sq); }

SplitVector operator+(const SplitVector& a, const SplitVector& b) {
    return SplitVector(a.horiz + b.horiz, a.vlevel + b.vlevel);
}

SplitVector operator-(const SplitVector& a, const SplitVector& b) {
    return SplitVector(a.horiz - b.horiz, a.vlevel - b.vlevel);
}

std::ostream& operator<<(std::ostream& os, const SplitVector& x) {
    os << "(";
    for (Eigen::Index i = 0; i < x.horiz.size(); ++i) os << x.horiz[i] << ", ";
    return os << "vlevel " << x.vlevel << ")";
}

}  // namespace engelset
