#include "engelset/chain.hpp"

#include <string>

namespace engelset {

namespace {

void check_on_layer(const EngelParams& params, std::int64_t p, const SplitVector& x) {
    if (x.dim() != params.d()) throw ValidationError("point dimension mismatch");
    if (x.vlevel != params.layer_vlevel(p))
        throw ValidationError("point is not on layer " + std::to_string(p));
    const SplitVector o = layer_origin(params, p);
    const Rational spacing = Rational(2) * params.a();
    for (Eigen::Index s = 0; s < x.horiz.size(); ++s) {
        if (!((x.horiz[s] - o.horiz[s]) / spacing).is_integer())
            throw ValidationError("point is not on the lattice of layer " + std::to_string(p));
    }
}

}  // namespace

SplitVector chain_point(const EngelParams& params, std::int64_t p, const SplitVector& x, std::int64_t j) {
    require_even_spacing(params, "layer chains");
    check_on_layer(params, p, x);
    SplitVector cur = x;
    if (j >= 0) {
        for (std::int64_t t = 0; t < j; ++t) {
            const std::int64_t m = p + t + 1;  // target layer of this step
            cur.vlevel += params.vstep_into(m);
            if (m % 2 == 0) {
                const auto u = params.seq().shift_unit(m / 2);
                cur.horiz[u.axis - 1] += Rational(u.sign) * params.delta();
            }
        }
    } else {
        for (std::int64_t t = 0; t > j; --t) {
            const std::int64_t m = p + t;  // undoing the step into layer m
            cur.vlevel -= params.vstep_into(m);
            if (m % 2 == 0) {
                const auto u = params.seq().shift_unit(m / 2);
                cur.horiz[u.axis - 1] -= Rational(u.sign) * params.delta();
            }
        }
    }
    return cur;
}

namespace {

// Certifies that `candidate` is the unique nearest point of window layer m to
// `target` by brute-force scan. Any layer point outside the window box is
// farther than 2a horizontally in some coordinate, so requiring the box to
// reach 2a beyond the target makes the scan conclusive (competitors at or
// under the candidate distance, which is < 2a here, cannot hide outside).
bool unique_nearest_in_layer(const LayerWindow& window, std::int64_t m, const SplitVector& target,
                             const SplitVector& candidate) {
    const EngelParams& params = window.params();
    const SplitVector& o = window.origin(m);
    const Rational reach = Rational(2) * params.a() * Rational(window.L());
    const Rational margin = Rational(2) * params.a();
    for (Eigen::Index s = 0; s < target.horiz.size(); ++s) {
        const Rational off = target.horiz[s] - o.horiz[s];
        if (abs(off) + margin > reach)
            throw InsufficientWindowError("window too small to certify nearest-point uniqueness");
    }

    const Rational best = sq_dist(target, candidate, params.unit_sq());
    bool unique = true;
    bool found_candidate = false;
    for (const SplitVector& z : window.layer_points(m)) {
        const Rational dd = sq_dist(target, z, params.unit_sq());
        if (dd < best) unique = false;
        if (dd == best) {
            if (z == candidate)
                found_candidate = true;
            else
                unique = false;
        }
    }
    return unique && found_candidate;
}

}  // namespace

std::vector<ChainStep> chain_profile(const LayerWindow& window, std::int64_t p, const SplitVector& x,
                                     std::int64_t j_min, std::int64_t j_max) {
    if (j_min > j_max) throw ValidationError("empty chain range");
    const EngelParams& params = window.params();
    require_even_spacing(params, "layer chains");
    if (!window.contains_layer(p + j_min) || !window.contains_layer(p + j_max))
        throw InsufficientWindowError("window does not contain the requested chain layers");

    std::vector<ChainStep> steps;
    SplitVector prev = chain_point(params, p, x, j_min - 1);
    SplitVector cur = chain_point(params, p, x, j_min);
    for (std::int64_t j = j_min; j <= j_max; ++j) {
        SplitVector next = chain_point(params, p, x, j + 1);
        ChainStep st;
        st.j = j;
        st.back_sq = sq_dist(cur, prev, params.unit_sq());
        st.fwd_sq = sq_dist(next, cur, params.unit_sq());
        st.unique_back = unique_nearest_in_layer(window, p + j, prev, cur);
        st.unique_fwd = unique_nearest_in_layer(window, p + j, next, cur);
        steps.push_back(std::move(st));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return steps;
}

}  // namespace engelset
