#pragma once

#include <utility>

#include "engelset/equivalence.hpp"

namespace engelset {

// One candidate center per layer of a vertical fundamental period, at the
// layer anchor: layers 0 .. 2P-1. Every cluster of the set is equivalent to
// one of these clusters, because horizontal lattice translations act inside
// each layer and the vertical period translates layer m onto m + 2P.
std::vector<std::pair<std::int64_t, SplitVector>> layer_representatives(const EngelParams& params);

// Equivalence classes of rho-clusters over a representative list.
struct ClassReport {
    struct Rep {
        std::int64_t layer;
        SplitVector center;
        std::size_t cluster_size = 0;
        int class_id = -1;  // 0-based; classes ordered by their smallest member layer
    };

    QuadRadius rho_sq;
    std::vector<Rep> reps;
    int n_classes = 0;
    std::vector<std::size_t> class_anchor;  // rep index of each class's smallest-layer member
    // witness onto the class anchor; disengaged for the anchors themselves
    std::vector<std::optional<IsometryWitness>> witnesses;
};

// Number of cluster classes at the given squared radius, over the canonical
// 2P representatives. Windows are auto-sized per representative; max_points
// caps their total size (ResourceCapError beyond).
ClassReport count_classes(const EngelParams& params, const QuadRadius& rho_sq,
                          std::uint64_t max_points = default_point_cap());

// Same count over an explicit representative layer list. The class
// structure and ids do not depend on the list's order.
ClassReport count_classes_over(const EngelParams& params, const std::vector<std::int64_t>& rep_layers,
                               const QuadRadius& rho_sq, std::uint64_t max_points = default_point_cap());

}  // namespace engelset
