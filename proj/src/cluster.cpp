#include "engelset/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "engelset/errors.hpp"

namespace engelset {

namespace {

// Sorts rel/rel_sq canonically and rebuilds the distance-class runs.
void finalize(Cluster& c) {
    std::vector<std::size_t> idx(c.rel.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        if (c.rel_sq[i] != c.rel_sq[j]) return c.rel_sq[i] < c.rel_sq[j];
        return cmp_lex(c.rel[i], c.rel[j]) < 0;
    });

    std::vector<SplitVector> rel;
    std::vector<Rational> rel_sq;
    rel.reserve(c.rel.size());
    rel_sq.reserve(c.rel.size());
    for (std::size_t i : idx) {
        rel.push_back(std::move(c.rel[i]));
        rel_sq.push_back(std::move(c.rel_sq[i]));
    }
    c.rel = std::move(rel);
    c.rel_sq = std::move(rel_sq);

    c.dist_classes.clear();
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= c.rel.size(); ++i) {
        if (i == c.rel.size() || c.rel_sq[i] != c.rel_sq[begin]) {
            c.dist_classes.emplace_back(begin, i);
            begin = i;
        }
    }
}

// Integer interval certain to contain every n with (diff + spacing*n)^2 <= rem;
// conservative float bounds, the caller re-checks each candidate exactly.
std::pair<std::int64_t, std::int64_t> offset_range(const Rational& diff, const Rational& spacing,
                                                   const QuadRadius& rem, std::int64_t L) {
    const double t = std::sqrt(std::max(0.0, rem.to_double())) + 1e-9;
    const double df = diff.to_double();
    const double sp = spacing.to_double();
    auto lo = static_cast<std::int64_t>(std::floor((-t - df) / sp)) - 1;
    auto hi = static_cast<std::int64_t>(std::ceil((t - df) / sp)) + 1;
    lo = std::max(lo, -L);
    hi = std::min(hi, L);
    return {lo, hi};
}

}  // namespace

Cluster extract_cluster(const LayerWindow& window, const SplitVector& center, const QuadRadius& rho_sq) {
    const EngelParams& params = window.params();
    if (sign_of(rho_sq) < 0) throw ValidationError("cluster radius must be nonnegative");
    if (center.dim() != params.d()) throw ValidationError("center dimension mismatch");

    // locate the center's layer
    std::int64_t center_layer = window.m_min();
    while (center_layer <= window.m_max() && params.layer_vlevel(center_layer) != center.vlevel) {
        ++center_layer;
    }
    if (center_layer > window.m_max()) throw ValidationError("center level matches no window layer");

    const Rational spacing = Rational(2) * params.a();
    const SplitVector& co = window.origin(center_layer);
    for (Eigen::Index s = 0; s < center.horiz.size(); ++s) {
        const Rational q = (center.horiz[s] - co.horiz[s]) / spacing;
        if (!q.is_integer()) throw ValidationError("center is not a point of its layer");
        if (abs(q) > Rational(window.L())) throw ValidationError("center lies outside the window box");
    }

    // the window must contain the closed ball: the first layers beyond the
    // range must already be strictly farther than rho
    for (const std::int64_t m : {window.m_min() - 1, window.m_max() + 1}) {
        const Rational dv(params.layer_vlevel(m) - center.vlevel);
        if (cmp_rational_quad(dv * dv * params.unit_sq(), rho_sq) <= 0) {
            throw InsufficientWindowError("window spans too few layers for the requested ball");
        }
    }
    // ... and rho horizontal margin around the center on every side
    for (std::int64_t m = window.m_min(); m <= window.m_max(); ++m) {
        const SplitVector& o = window.origin(m);
        for (Eigen::Index s = 0; s < center.horiz.size(); ++s) {
            const Rational margin = spacing * Rational(window.L()) - abs(center.horiz[s] - o.horiz[s]);
            if (margin.sign() < 0 || cmp_rational_quad(margin * margin, rho_sq) < 0) {
                throw InsufficientWindowError("window is horizontally too narrow for the requested ball");
            }
        }
    }

    Cluster c;
    c.center = center;
    c.unit_sq = params.unit_sq();

    const int hdims = params.d() - 1;
    for (std::int64_t m = window.m_min(); m <= window.m_max(); ++m) {
        const Rational dv(params.layer_vlevel(m) - center.vlevel);
        const Rational vert_sq = dv * dv * params.unit_sq();
        const QuadRadius rem(rho_sq.u - vert_sq, rho_sq.v, rho_sq.D);
        if (sign_of(rem) < 0) continue;

        const SplitVector& o = window.origin(m);
        std::vector<std::pair<std::int64_t, std::int64_t>> ranges(static_cast<std::size_t>(hdims));
        bool empty = false;
        for (int s = 0; s < hdims; ++s) {
            ranges[static_cast<std::size_t>(s)] =
                offset_range(o.horiz[s] - center.horiz[s], spacing, rem, window.L());
            if (ranges[static_cast<std::size_t>(s)].first > ranges[static_cast<std::size_t>(s)].second)
                empty = true;
        }
        if (empty) continue;

        SplitVector z;
        z.horiz.resize(hdims);
        z.vlevel = params.layer_vlevel(m);
        std::vector<std::int64_t> n(static_cast<std::size_t>(hdims));
        std::vector<Rational> partial(static_cast<std::size_t>(hdims) + 1);
        partial[0] = vert_sq;

        // odometer over the per-coordinate ranges with prefix-sum pruning
        int s = 0;
        n[0] = ranges[0].first;
        while (s >= 0) {
            if (s < hdims && n[static_cast<std::size_t>(s)] > ranges[static_cast<std::size_t>(s)].second) {
                --s;
                if (s >= 0) ++n[static_cast<std::size_t>(s)];
                continue;
            }
            const Rational coord = o.horiz[s] + spacing * Rational(n[static_cast<std::size_t>(s)]);
            const Rational diff = coord - center.horiz[s];
            partial[static_cast<std::size_t>(s) + 1] = partial[static_cast<std::size_t>(s)] + diff * diff;
            z.horiz[s] = coord;
            if (cmp_rational_quad(partial[static_cast<std::size_t>(s) + 1], rho_sq) > 0) {
                ++n[static_cast<std::size_t>(s)];
                continue;
            }
            if (s + 1 < hdims) {
                ++s;
                n[static_cast<std::size_t>(s)] = ranges[static_cast<std::size_t>(s)].first;
                continue;
            }
            if (z != center) {
                c.rel.push_back(z - center);
                c.rel_sq.push_back(partial[static_cast<std::size_t>(s) + 1]);
            }
            ++n[static_cast<std::size_t>(s)];
        }
    }

    finalize(c);
    return c;
}

Cluster cluster_from_points(const std::vector<SplitVector>& points, const SplitVector& center,
                            const QuadRadius& rho_sq, const Rational& unit_sq) {
    if (sign_of(rho_sq) < 0) throw ValidationError("cluster radius must be nonnegative");
    Cluster c;
    c.center = center;
    c.unit_sq = unit_sq;
    for (const auto& p : points) {
        if (p == center) continue;
        if (p.dim() != center.dim()) throw ValidationError("point dimension mismatch");
        const Rational sq = sq_dist(p, center, unit_sq);
        if (cmp_rational_quad(sq, rho_sq) <= 0) {
            c.rel.push_back(p - center);
            c.rel_sq.push_back(sq);
        }
    }
    finalize(c);
    return c;
}

}  // namespace engelset
