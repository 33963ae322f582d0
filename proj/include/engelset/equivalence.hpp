#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "engelset/cluster.hpp"
#include "engelset/ortho_map.hpp"

namespace engelset {

// Certificate that two clusters are congruent about their centers:
// a bijection of relative points preserving every pairwise inner product
// (hence an isometry fixing the center), plus the explicit orthogonal map
// when one is recoverable in split-block form.
struct IsometryWitness {
    std::vector<std::size_t> bijection;  // bijection[i] = target index of source rel[i]
    std::optional<OrthoMap> map;
};

// Decides congruence with fixed center. Returns a witness, or nullopt when
// no center-fixing isometry maps one cluster onto the other. Requires both
// clusters to carry the same vertical unit. Exact throughout.
std::optional<IsometryWitness> clusters_equivalent(const Cluster& src, const Cluster& dst);

// Symmetry group of a cluster about its center. Only finite (and only
// enumerated) when the relative points span R^d; spanning=false otherwise.
struct ClusterGroup {
    bool spanning = false;
    std::vector<IsometryWitness> elements;  // identity included; deterministic order

    std::size_t order() const { return elements.size(); }
};

ClusterGroup cluster_group(const Cluster& c);

// Exact re-verification of a witness. Checks the bijection is a norm- and
// Gram-preserving permutation; checks the map (when present) sends every
// source point onto its image. Pairwise products are checked exhaustively
// while n(n-1)/2 stays within pair_budget, and on a deterministic sample
// beyond that (the map check, when present, stays complete regardless).
bool verify_witness(const Cluster& src, const Cluster& dst, const IsometryWitness& w,
                    std::size_t pair_budget = 4000000);

// Witness algebra, for relation-property checks: inverse and composition
// (apply `first`, then `then`). Maps compose when both are present.
IsometryWitness invert_witness(const IsometryWitness& w);
IsometryWitness compose_witness(const IsometryWitness& first, const IsometryWitness& then);

}  // namespace engelset
