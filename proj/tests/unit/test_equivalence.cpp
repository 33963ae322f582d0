#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "engelset/counting.hpp"
#include "engelset/errors.hpp"
#include "engelset/presets.hpp"

using engelset::Cluster;
using engelset::IsometryWitness;
using engelset::OrthoMap;
using engelset::QuadRadius;
using engelset::Rational;
using engelset::SplitVector;

namespace {

SplitVector sv(std::vector<long> horiz, std::int64_t vlevel) {
    SplitVector p;
    p.horiz.resize(static_cast<Eigen::Index>(horiz.size()));
    for (std::size_t s = 0; s < horiz.size(); ++s) {
        p.horiz[static_cast<Eigen::Index>(s)] = Rational(horiz[s]);
    }
    p.vlevel = vlevel;
    return p;
}

Cluster tiny_cluster(std::vector<SplitVector> points, const Rational& unit_sq) {
    SplitVector center;
    center.horiz = engelset::HVector::Zero(points.front().horiz.size());
    center.vlevel = 0;
    // radius big enough to keep everything
    Rational max_sq(0);
    for (const auto& p : points) max_sq = std::max(max_sq, engelset::sq_norm(p, unit_sq));
    return engelset::cluster_from_points(points, center, max_sq, unit_sq);
}

// Independent oracle: enumerate every norm-class-respecting bijection and
// keep those preserving the full Gram matrix. Only for tiny clusters.
std::size_t exhaustive_gram_bijections(const Cluster& A, const Cluster& B) {
    const std::size_t n = A.rel.size();
    if (B.rel.size() != n || A.rel_sq != B.rel_sq || A.unit_sq != B.unit_sq) return 0;

    std::vector<std::size_t> bij(n);
    std::vector<bool> used(n, false);
    std::size_t count = 0;

    auto full_gram_ok = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                if (engelset::dot(A.rel[i], A.rel[j], A.unit_sq) !=
                    engelset::dot(B.rel[bij[i]], B.rel[bij[j]], B.unit_sq)) {
                    return false;
                }
            }
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            if (full_gram_ok()) ++count;
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || A.rel_sq[i] != B.rel_sq[j]) continue;
            used[j] = true;
            bij[i] = j;
            rec(i + 1);
            used[j] = false;
        }
    };
    rec(0);
    return count;
}

Cluster rep_cluster(const engelset::EngelParams& params, std::int64_t m, const QuadRadius& rho_sq) {
    const auto spec = engelset::required_window(params, m, rho_sq);
    const auto window = engelset::generate_window(params, spec);
    return engelset::extract_cluster(window, engelset::layer_origin(params, m), rho_sq);
}

}  // namespace

TEST_CASE("every cluster is equivalent to itself with a verifiable witness") {
    const auto params = engelset::planar_example();
    const auto c = rep_cluster(params, 0, Rational(26 * 26));
    const auto w = engelset::clusters_equivalent(c, c);
    REQUIRE(w.has_value());
    CHECK(engelset::verify_witness(c, c, *w));
    REQUIRE(w->map.has_value());
    CHECK(w->map->is_identity());
}

TEST_CASE("same-layer centers give equivalent clusters via pure translation") {
    const auto params = engelset::spatial_example();
    const auto window = engelset::generate_window(params, -3, 3, 9);
    const auto rho_sq = Rational(18 * 18);

    const SplitVector c0 = engelset::layer_origin(params, 0);
    SplitVector c1 = c0;
    c1.horiz[0] += Rational(8);
    c1.horiz[1] += Rational(-16);

    const auto a = engelset::extract_cluster(window, c0, rho_sq);
    const auto b = engelset::extract_cluster(window, c1, rho_sq);
    const auto w = engelset::clusters_equivalent(a, b);
    REQUIRE(w.has_value());
    CHECK(engelset::verify_witness(a, b, *w));
    // translated copies have identical relative points, so the map is trivial
    REQUIRE(w->map.has_value());
    CHECK(w->map->is_identity());
}

TEST_CASE("planar radius-52 clusters: base anchor versus layer 2") {
    const auto params = engelset::planar_example();
    const auto a = rep_cluster(params, 0, Rational(52 * 52));
    const auto b = rep_cluster(params, 2, Rational(52 * 52));
    CHECK(a.size() == b.size());  // same profile, still inequivalent
    CHECK(!engelset::clusters_equivalent(a, b).has_value());
}

TEST_CASE("witnesses invert and compose like the isometries they certify") {
    const auto params = engelset::planar_example();
    const auto rho_sq = Rational(52 * 52);
    const auto a = rep_cluster(params, 0, rho_sq);
    const auto b = rep_cluster(params, 1, rho_sq);
    const auto c = rep_cluster(params, 5, rho_sq);

    const auto ab = engelset::clusters_equivalent(a, b);
    const auto bc = engelset::clusters_equivalent(b, c);
    REQUIRE(ab.has_value());
    REQUIRE(bc.has_value());

    const auto ba = engelset::invert_witness(*ab);
    CHECK(engelset::verify_witness(b, a, ba));

    const auto ac = engelset::compose_witness(*ab, *bc);
    CHECK(engelset::verify_witness(a, c, ac));
}

TEST_CASE("engine verdicts agree with exhaustive search on tiny clusters") {
    const Rational unit(1);

    // cross: one norm class of four points, full square symmetry
    const auto cross = tiny_cluster({sv({1}, 0), sv({-1}, 0), sv({0}, 1), sv({0}, -1)}, unit);
    CHECK(exhaustive_gram_bijections(cross, cross) == 8u);
    const auto cross_group = engelset::cluster_group(cross);
    CHECK(cross_group.spanning);
    CHECK(cross_group.order() == 8u);
    // split-block maps exist for exactly the four elements that do not
    // exchange the horizontal and vertical axes
    std::size_t with_map = 0;
    for (const auto& w : cross_group.elements) {
        if (w.map.has_value()) {
            ++with_map;
            CHECK(engelset::verify_witness(cross, cross, w));
        }
    }
    CHECK(with_map == 4u);

    // collinear pairs: equivalent only when the inner products agree
    const auto right = tiny_cluster({sv({10}, 0), sv({20}, 0)}, unit);
    const auto left = tiny_cluster({sv({-10}, 0), sv({-20}, 0)}, unit);
    const auto split = tiny_cluster({sv({10}, 0), sv({-20}, 0)}, unit);
    CHECK(exhaustive_gram_bijections(right, left) == 1u);
    CHECK(engelset::clusters_equivalent(right, left).has_value());
    CHECK(exhaustive_gram_bijections(right, split) == 0u);
    CHECK(!engelset::clusters_equivalent(right, split).has_value());

    // planar radius-26 cluster: trivial symmetry, engine matches the oracle
    const auto params = engelset::planar_example();
    const auto c26 = rep_cluster(params, 0, Rational(26 * 26));
    CHECK(exhaustive_gram_bijections(c26, c26) == 1u);
    const auto g26 = engelset::cluster_group(c26);
    CHECK(g26.spanning);
    CHECK(g26.order() == 1u);

    // pairwise verdicts across layers agree with the oracle as well
    for (std::int64_t m = 1; m <= 5; ++m) {
        const auto other = rep_cluster(params, m, Rational(26 * 26));
        const bool engine = engelset::clusters_equivalent(c26, other).has_value();
        const bool oracle = exhaustive_gram_bijections(c26, other) > 0;
        CHECK(engine == oracle);
    }
}

TEST_CASE("non-spanning clusters get no finite group but still compare") {
    const Rational unit(1);
    const auto right = tiny_cluster({sv({10}, 0), sv({20}, 0)}, unit);
    const auto g = engelset::cluster_group(right);
    CHECK(!g.spanning);
    CHECK(g.order() == 0u);

    const auto left = tiny_cluster({sv({-10}, 0), sv({-20}, 0)}, unit);
    const auto w = engelset::clusters_equivalent(right, left);
    REQUIRE(w.has_value());
    CHECK(!w->map.has_value());  // rank 1 leaves the map underdetermined
    CHECK(engelset::verify_witness(right, left, *w));
}

TEST_CASE("spatial symmetry groups at radii 18 and 36") {
    const auto params = engelset::spatial_example();

    const auto c18 = rep_cluster(params, 0, Rational(18 * 18));
    const auto g18 = engelset::cluster_group(c18);
    CHECK(g18.spanning);
    REQUIRE(g18.order() == 2u);
    std::size_t identities = 0;
    std::size_t flips = 0;
    for (const auto& w : g18.elements) {
        REQUIRE(w.map.has_value());
        CHECK(engelset::verify_witness(c18, c18, w));
        if (w.map->is_identity()) {
            ++identities;
        } else if (*w.map == OrthoMap::axis_flip(3, 0)) {
            ++flips;
        }
    }
    CHECK(identities == 1u);
    CHECK(flips == 1u);

    const auto c36 = rep_cluster(params, 0, Rational(36 * 36));
    const auto g36 = engelset::cluster_group(c36);
    CHECK(g36.spanning);
    CHECK(g36.order() == 1u);
}

TEST_CASE("corrupted witnesses fail verification") {
    const auto params = engelset::planar_example();
    const auto c = rep_cluster(params, 0, Rational(26 * 26));
    auto w = engelset::clusters_equivalent(c, c);
    REQUIRE(w.has_value());

    auto broken = *w;
    REQUIRE(broken.bijection.size() >= 3u);
    std::swap(broken.bijection[0], broken.bijection[2]);  // crosses norm classes
    broken.map.reset();
    CHECK(!engelset::verify_witness(c, c, broken));

    auto truncated = *w;
    truncated.bijection.pop_back();
    CHECK(!engelset::verify_witness(c, c, truncated));
}

TEST_CASE("clusters with different vertical units never match") {
    const auto a = tiny_cluster({sv({1}, 1), sv({-1}, -1)}, Rational(1));
    const auto b = tiny_cluster({sv({1}, 1), sv({-1}, -1)}, Rational(4));
    CHECK(!engelset::clusters_equivalent(a, b).has_value());
}
