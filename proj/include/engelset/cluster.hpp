#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "engelset/window.hpp"

namespace engelset {

// The points of a set inside the closed rho-ball around one of its points,
// stored relative to that center. rel is sorted by (squared norm, vlevel,
// horizontal lex) so equal clusters compare equal as plain vectors, and
// dist_classes partitions rel into runs of equal squared norm.
struct Cluster {
    SplitVector center;
    Rational unit_sq = Rational(1);
    std::vector<SplitVector> rel;  // center excluded; every norm^2 <= rho^2
    std::vector<Rational> rel_sq;  // squared norms, aligned with rel
    std::vector<std::pair<std::size_t, std::size_t>> dist_classes;  // [begin, end) runs

    std::size_t size() const { return rel.size(); }
    int dim() const { return center.dim(); }
};

// Cuts the rho-ball around center out of the window. The center must be a
// window point; the window must provably contain the whole closed ball
// (enough layers above and below, and horizontal margin rho on every side),
// otherwise InsufficientWindowError. Membership tests are exact.
Cluster extract_cluster(const LayerWindow& window, const SplitVector& center, const QuadRadius& rho_sq);

// Same ball cut, but out of an explicit point list (the universe is taken
// as given, so no containment certification is possible or attempted).
// center itself is skipped if present.
Cluster cluster_from_points(const std::vector<SplitVector>& points, const SplitVector& center,
                            const QuadRadius& rho_sq, const Rational& unit_sq);

}  // namespace engelset
