#include "engelset/counting.hpp"

#include <algorithm>
#include <numeric>

#include "engelset/errors.hpp"

namespace engelset {

std::vector<std::pair<std::int64_t, SplitVector>> layer_representatives(const EngelParams& params) {
    std::vector<std::pair<std::int64_t, SplitVector>> reps;
    const int two_p = 2 * params.seq().period();
    reps.reserve(static_cast<std::size_t>(two_p));
    for (int m = 0; m < two_p; ++m) {
        reps.emplace_back(m, layer_origin(params, m));
    }
    return reps;
}

ClassReport count_classes_over(const EngelParams& params, const std::vector<std::int64_t>& rep_layers,
                               const QuadRadius& rho_sq, std::uint64_t max_points) {
    if (rep_layers.empty()) throw ValidationError("need at least one representative layer");

    ClassReport report;
    report.rho_sq = rho_sq;

    std::vector<Cluster> clusters;
    clusters.reserve(rep_layers.size());
    for (const std::int64_t m : rep_layers) {
        const WindowSpec spec = required_window(params, m, rho_sq);
        const LayerWindow window = generate_window(params, spec, max_points);
        const SplitVector center = layer_origin(params, m);
        clusters.push_back(extract_cluster(window, center, rho_sq));

        ClassReport::Rep rep;
        rep.layer = m;
        rep.center = center;
        rep.cluster_size = clusters.back().size();
        report.reps.push_back(std::move(rep));
    }

    // union into classes, testing each representative against one member
    // (the first seen) of every existing class
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        bool placed = false;
        for (auto& members : classes) {
            if (clusters_equivalent(clusters[i], clusters[members.front()])) {
                members.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }

    // canonical ids: classes ordered by their smallest member layer, and the
    // smallest-layer member anchors each class; this is order-independent
    for (auto& members : classes) {
        std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
            return report.reps[x].layer < report.reps[y].layer;
        });
    }
    std::sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) {
        return report.reps[x.front()].layer < report.reps[y.front()].layer;
    });

    report.n_classes = static_cast<int>(classes.size());
    report.witnesses.assign(clusters.size(), std::nullopt);
    for (std::size_t cid = 0; cid < classes.size(); ++cid) {
        const std::size_t anchor = classes[cid].front();
        report.class_anchor.push_back(anchor);
        for (const std::size_t member : classes[cid]) {
            report.reps[member].class_id = static_cast<int>(cid);
            if (member != anchor) {
                report.witnesses[member] = clusters_equivalent(clusters[member], clusters[anchor]);
            }
        }
    }
    return report;
}

ClassReport count_classes(const EngelParams& params, const QuadRadius& rho_sq, std::uint64_t max_points) {
    std::vector<std::int64_t> layers;
    const int two_p = 2 * params.seq().period();
    for (int m = 0; m < two_p; ++m) layers.push_back(m);
    return count_classes_over(params, layers, rho_sq, max_points);
}

}  // namespace engelset
