#include <doctest.h>

#include <cstdint>
#include <vector>

#include "engelset/counting.hpp"
#include "engelset/presets.hpp"

using engelset::ClassReport;
using engelset::QuadRadius;
using engelset::Rational;

namespace {

engelset::Cluster rep_cluster(const engelset::EngelParams& params, std::int64_t m,
                              const QuadRadius& rho_sq) {
    const auto spec = engelset::required_window(params, m, rho_sq);
    const auto window = engelset::generate_window(params, spec);
    return engelset::extract_cluster(window, engelset::layer_origin(params, m), rho_sq);
}

// recompute every cluster and check each stored witness against it
void check_report_witnesses(const engelset::EngelParams& params, const ClassReport& report) {
    std::vector<engelset::Cluster> clusters;
    clusters.reserve(report.reps.size());
    for (const auto& rep : report.reps) {
        clusters.push_back(rep_cluster(params, rep.layer, report.rho_sq));
        CHECK(clusters.back().size() == rep.cluster_size);
    }
    REQUIRE(report.witnesses.size() == report.reps.size());
    REQUIRE(report.class_anchor.size() == static_cast<std::size_t>(report.n_classes));
    for (std::size_t i = 0; i < report.reps.size(); ++i) {
        const int cid = report.reps[i].class_id;
        REQUIRE(cid >= 0);
        REQUIRE(cid < report.n_classes);
        const std::size_t anchor = report.class_anchor[static_cast<std::size_t>(cid)];
        if (i == anchor) {
            CHECK(!report.witnesses[i].has_value());
        } else {
            REQUIRE(report.witnesses[i].has_value());
            CHECK(engelset::verify_witness(clusters[i], clusters[anchor], *report.witnesses[i]));
        }
    }
}

std::vector<int> class_ids(const ClassReport& report) {
    std::vector<int> ids;
    for (const auto& rep : report.reps) ids.push_back(rep.class_id);
    return ids;
}

}  // namespace

TEST_CASE("one representative per layer of the vertical period") {
    const auto planar = engelset::layer_representatives(engelset::planar_example());
    REQUIRE(planar.size() == 6u);
    for (std::size_t i = 0; i < planar.size(); ++i) {
        CHECK(planar[i].first == static_cast<std::int64_t>(i));
        CHECK(planar[i].second ==
              engelset::layer_origin(engelset::planar_example(), planar[i].first));
    }

    const auto spatial = engelset::layer_representatives(engelset::spatial_example());
    CHECK(spatial.size() == 8u);
}

TEST_CASE("planar class counts at radii 48 and 52") {
    const auto params = engelset::planar_example();

    const auto r48 = engelset::count_classes(params, Rational(48 * 48));
    CHECK(r48.n_classes == 1);
    CHECK(class_ids(r48) == std::vector<int>{0, 0, 0, 0, 0, 0});
    for (const auto& rep : r48.reps) CHECK(rep.cluster_size == 26u);
    check_report_witnesses(params, r48);

    // at 52 the drift direction of the outermost layers becomes visible
    const auto r52 = engelset::count_classes(params, Rational(52 * 52));
    CHECK(r52.n_classes == 2);
    CHECK(class_ids(r52) == std::vector<int>{0, 0, 1, 1, 0, 0});
    CHECK(r52.class_anchor == std::vector<std::size_t>{0, 2});
    for (const auto& rep : r52.reps) CHECK(rep.cluster_size == 36u);
    check_report_witnesses(params, r52);
}

TEST_CASE("class labels do not depend on representative order") {
    const auto params = engelset::planar_example();
    const std::vector<std::int64_t> shuffled{5, 1, 3, 0, 2, 4};
    const auto report = engelset::count_classes_over(params, shuffled, Rational(52 * 52));
    CHECK(report.n_classes == 2);
    CHECK(class_ids(report) == std::vector<int>{0, 0, 1, 0, 1, 0});
    CHECK(report.class_anchor == std::vector<std::size_t>{3, 4});
    check_report_witnesses(params, report);
}

TEST_CASE("spatial class counts at radii 40 and 54") {
    const auto params = engelset::spatial_example();

    const auto r40 = engelset::count_classes(params, Rational(40 * 40));
    CHECK(r40.n_classes == 1);
    check_report_witnesses(params, r40);

    // layers m and m+4 match (the sign period is half the vertical period)
    // and each block of four is palindromic, leaving two classes
    const auto r54 = engelset::count_classes(params, Rational(54 * 54));
    CHECK(r54.n_classes == 2);
    CHECK(class_ids(r54) == std::vector<int>{0, 1, 1, 0, 0, 1, 1, 0});
    for (const auto& rep : r54.reps) CHECK(rep.cluster_size == 741u);
    check_report_witnesses(params, r54);
}

TEST_CASE("radii below the packing diameter give a single class of empty clusters") {
    const auto params = engelset::planar_example();
    const auto report = engelset::count_classes(params, Rational(1));
    CHECK(report.n_classes == 1);
    for (const auto& rep : report.reps) CHECK(rep.cluster_size == 0u);
}
