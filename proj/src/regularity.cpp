#include "engelset/regularity.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "engelset/errors.hpp"

namespace engelset {

namespace {

Rational half() { return Rational(1) / Rational(2); }

// nearest multiple of step to off, as the integer factor
std::int64_t round_to_step(const Rational& off, const Rational& step) {
    return floor_to_int64(off / step + half());
}

}  // namespace

RegularityVerdict is_regular(const ShiftSequence& seq) {
    const int d = seq.d();
    const int tau = seq.sign_term(d) * seq.sign_term(1);
    for (int i = 1; i <= seq.period(); ++i) {
        if (seq.sign_term(i + d - 1) != tau * seq.sign_term(i)) return {};
    }
    return {true, tau};
}

int kappa_invariant(const ShiftSequence& seq) {
    return seq.sign_term(seq.d()) * seq.sign_term(1);
}

bool HypothesisReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const HypothesisCheck& c) { return c.holds; });
}

HypothesisReport onecluster_hypothesis(const EngelParams& params, const Rational& eps) {
    if (eps.sign() <= 0) throw ValidationError("eps must be positive");
    require_even_spacing(params, "onecluster_hypothesis");

    const int d = params.d();
    const Rational R_sq = params.R_sq();
    const Rational& a = params.a();
    const Rational& b_sq = params.b_sq();
    const Rational four_dd(4 * d * d);
    const Rational dd1(d * (d - 1));

    HypothesisReport report;
    report.eps = eps;

    const QuadRadius b_rad(Rational(0), Rational(1), b_sq);
    report.checks.push_back({"a < b", "<", QuadRadius(a), b_rad,
                             cmp_rational_quad(a, b_rad) < 0});

    // built raw: the reported radius may legitimately be nonpositive here
    report.checks.push_back({"2dR - eps < 2db", "<", QuadRadius(-eps, Rational(2 * d), R_sq),
                             QuadRadius(Rational(0), Rational(2 * d), b_sq),
                             cmp_sqrt_diff(four_dd * R_sq, four_dd * b_sq, eps) < 0});

    const QuadRadius bound(Rational(0), eps / dd1, b_sq);
    report.checks.push_back({"a^2 <= eps b / (d(d-1))", "<=", QuadRadius(a * a), bound,
                             cmp_rational_quad(a * a, bound) <= 0});

    return report;
}

GroupPrediction predict_group(const EngelParams& params, int k, std::int64_t p) {
    if (k < 1) throw ValidationError("k must be >= 1");
    require_even_spacing(params, "predict_group");

    const int d = params.d();
    const Rational R_sq = params.R_sq();
    const Rational& b_sq = params.b_sq();

    GroupPrediction out;
    out.k = k;
    out.radius = two_kR(k, R_sq);
    out.radius_bound = QuadRadius(Rational(0), Rational(2 * (k + 1)), b_sq);
    out.applicable =
        Rational(4 * k * k) * R_sq < Rational(4 * (k + 1) * (k + 1)) * b_sq;
    out.sufficient_form =
        Rational(k * (d - 1)) * params.a() * params.a() < Rational(2) * b_sq;

    const auto used = basis_used(params, p, k);
    for (int axis = 1; axis <= d - 1; ++axis) {
        if (std::find(used.begin(), used.end(), axis) == used.end()) {
            out.free_axes.push_back(axis);
        }
    }

    const std::size_t n = out.free_axes.size();
    out.predicted_order = 1;
    for (std::size_t i = 1; i <= n; ++i) out.predicted_order *= 2 * i;  // 2^n n!

    for (const int axis : out.free_axes) {
        out.generators.push_back(OrthoMap::axis_flip(d, axis - 1));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<int> perm(static_cast<std::size_t>(d - 1));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(out.free_axes[i] - 1)],
                  perm[static_cast<std::size_t>(out.free_axes[i + 1] - 1)]);
        out.generators.push_back(
            OrthoMap::signed_permutation(perm, std::vector<int>(static_cast<std::size_t>(d - 1), 1), 1));
    }
    return out;
}

EngelParams choose_parameters(int d, const Rational& R_sq, const Rational& eps) {
    if (d < 2) throw ValidationError("d must be >= 2");
    if (R_sq.sign() <= 0) throw ValidationError("R_sq must be positive");
    if (eps.sign() <= 0) throw ValidationError("eps must be positive");
    if (cmp_rational_quad(eps, two_kR(d, R_sq)) >= 0) {
        throw ValidationError("eps must stay below 2dR");
    }

    std::vector<int> abs_pattern(static_cast<std::size_t>(d - 1));
    std::iota(abs_pattern.begin(), abs_pattern.end(), 1);
    std::vector<int> signs(static_cast<std::size_t>(3 * (d - 1)), 1);
    std::fill(signs.begin() + 2 * (d - 1), signs.end(), -1);
    ShiftSequence seq(d, std::move(abs_pattern), std::move(signs));

    const Rational d1(d - 1);
    const Rational four_dd(4 * d * d);
    const Rational dd1(d * (d - 1));
    Rational a = sqrt_lower_bound(R_sq / Rational(4 * d));

    for (int iter = 0; iter < 512 && a.sign() > 0; ++iter) {
        const Rational a_sq = a * a;
        const Rational b_sq = R_sq - d1 * a_sq;
        const bool ok = b_sq.sign() > 0 && a_sq < b_sq &&
                        cmp_sqrt_diff(four_dd * R_sq, four_dd * b_sq, eps) < 0 &&
                        (dd1 * a_sq) * (dd1 * a_sq) < eps * eps * b_sq;
        if (ok) return EngelParams(seq, a, b_sq, a / Rational(2));
        a = a / Rational(2);
    }
    throw ValidationError("no admissible a found; eps or R_sq degenerate");
}

PackingReport verify_packing(const LayerWindow& window, const Rational& r_sq) {
    if (r_sq.sign() < 0) throw ValidationError("r_sq must be nonnegative");
    const Rational& unit_sq = window.params().unit_sq();

    std::vector<std::vector<SplitVector>> layers;
    for (std::int64_t m = window.m_min(); m <= window.m_max(); ++m) {
        layers.push_back(window.layer_points(m));
    }

    PackingReport report;
    auto consider = [&](const SplitVector& p, const SplitVector& q) {
        const Rational sq = sq_dist(p, q, unit_sq);
        if (!report.min_sq || sq < *report.min_sq) {
            report.min_sq = sq;
            report.closest = {p, q};
        }
    };

    for (const auto& pts : layers) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                // within a layer only the horizontal part contributes; skip
                // the pair as soon as one coordinate alone is too far
                if (report.min_sq) {
                    bool far = false;
                    for (Eigen::Index s = 0; s < pts[i].horiz.size() && !far; ++s) {
                        const Rational dh = pts[i].horiz[s] - pts[j].horiz[s];
                        far = !(dh * dh < *report.min_sq);
                    }
                    if (far) continue;
                }
                consider(pts[i], pts[j]);
            }
        }
    }
    for (std::size_t i = 0; i < layers.size(); ++i) {
        for (std::size_t j = i + 1; j < layers.size(); ++j) {
            if (layers[i].empty() || layers[j].empty()) continue;
            const std::int64_t dv = layers[j].front().vlevel - layers[i].front().vlevel;
            if (report.min_sq && !(Rational(dv * dv) * unit_sq < *report.min_sq)) break;
            for (const auto& p : layers[i]) {
                for (const auto& q : layers[j]) consider(p, q);
            }
        }
    }

    report.ok = !report.min_sq || !(*report.min_sq < Rational(4) * r_sq);
    return report;
}

Rational nearest_sq(const LayerWindow& window, const HVector& horiz, const Rational& w,
                    const Rational& reach_sq) {
    if (reach_sq.sign() < 0) throw ValidationError("reach_sq must be nonnegative");
    const EngelParams& params = window.params();
    if (horiz.size() != params.d() - 1) throw ValidationError("query dimension mismatch");

    const Rational& unit_sq = params.unit_sq();
    const Rational two_a = Rational(2) * params.a();
    const Rational extent = two_a * Rational(window.L());

    // layers just outside the window must already be beyond reach
    for (const std::int64_t m : {window.m_min() - 1, window.m_max() + 1}) {
        const Rational dv = w - Rational(params.layer_vlevel(m));
        if (!(reach_sq < dv * dv * unit_sq)) {
            throw InsufficientWindowError("window too short vertically for the query");
        }
    }

    std::optional<Rational> best;
    for (std::int64_t m = window.m_min(); m <= window.m_max(); ++m) {
        const Rational dv = w - Rational(params.layer_vlevel(m));
        const Rational vert = dv * dv * unit_sq;
        const bool within_reach = !(reach_sq < vert);
        const SplitVector& origin = window.origin(m);

        Rational sq = vert;
        for (Eigen::Index s = 0; s < horiz.size(); ++s) {
            const Rational off = horiz[s] - origin.horiz[s];
            if (within_reach) {
                const Rational margin = extent - abs(off);
                if (margin.sign() < 0 || margin * margin < reach_sq) {
                    throw InsufficientWindowError("window too narrow for the query");
                }
            }
            const std::int64_t n =
                std::clamp<std::int64_t>(round_to_step(off, two_a), -window.L(), window.L());
            const Rational miss = off - two_a * Rational(n);
            sq += miss * miss;
        }
        if (!best || sq < *best) best = sq;
    }
    return *best;
}

CoveringReport verify_covering(const LayerWindow& window, const Rational& R_sq,
                               std::uint64_t n_samples, std::uint64_t seed) {
    if (R_sq.sign() <= 0) throw ValidationError("R_sq must be positive");
    const EngelParams& params = window.params();
    require_even_spacing(params, "verify_covering");
    if (!window.contains_layer(0) || !window.contains_layer(1)) {
        throw InsufficientWindowError("covering check needs layers 0 and 1");
    }

    const int d = params.d();
    const Rational flo = sqrt_lower_bound(R_sq);
    const Rational R_up = flo * flo == R_sq ? flo : flo + Rational(1);
    const Rational unit_flo = sqrt_lower_bound(params.unit_sq());
    const std::int64_t guard = floor_to_int64(R_up / unit_flo) + 1;

    const Rational w_lo(params.layer_vlevel(window.m_min()) + guard);
    const Rational w_hi(params.layer_vlevel(window.m_max()) - guard);
    if (w_hi < w_lo) throw InsufficientWindowError("window too short for covering samples");

    const Rational margin = Rational(2) * params.a() * Rational(window.L()) - R_up;
    HVector lo(d - 1), hi(d - 1);
    for (Eigen::Index s = 0; s < d - 1; ++s) {
        lo[s] = window.origin(window.m_min()).horiz[s];
        hi[s] = lo[s];
        for (std::int64_t m = window.m_min() + 1; m <= window.m_max(); ++m) {
            const Rational& o = window.origin(m).horiz[s];
            if (o > lo[s]) lo[s] = o;  // max of origins bounds the left edge
            if (o < hi[s]) hi[s] = o;
        }
        lo[s] -= margin;
        hi[s] += margin;
        if (hi[s] < lo[s]) throw InsufficientWindowError("window too narrow for covering samples");
    }

    CoveringReport report;

    // deep hole certificate: offset (a,..,a) from a layer-0 point, height b
    HVector sharp = window.origin(0).horiz;
    for (Eigen::Index s = 0; s < d - 1; ++s) sharp[s] += params.a();
    report.sharp_sq = nearest_sq(window, sharp, Rational(1), params.R_sq());
    report.sharp_ok = report.sharp_sq == params.R_sq();

    std::mt19937_64 gen(seed);
    constexpr std::uint64_t kGrid = 4096;
    const auto draw = [&gen]() {
        return Rational(static_cast<long>(gen() % (kGrid + 1))) / Rational(static_cast<long>(kGrid));
    };

    report.ok = true;
    HVector q(d - 1);
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        for (Eigen::Index s = 0; s < d - 1; ++s) q[s] = lo[s] + (hi[s] - lo[s]) * draw();
        const Rational w = w_lo + (w_hi - w_lo) * draw();
        const Rational sq = nearest_sq(window, q, w, R_sq);
        if (report.samples == 0 || report.max_nearest_sq < sq) report.max_nearest_sq = sq;
        ++report.samples;
        if (R_sq < sq) report.ok = false;
    }
    return report;
}

EquivalenceCheckReport enreg_check(const EngelParams& params, std::uint64_t max_points) {
    require_even_spacing(params, "enreg_check");
    const Rational rho_sq = Rational(4 * params.d() * params.d()) * params.R_sq();
    EquivalenceCheckReport report{
        is_regular(params.seq()), 0, false, count_classes(params, rho_sq, max_points)};
    report.n_at_2dR = report.classes.n_classes;
    report.consistent = report.verdict.regular == (report.n_at_2dR == 1);
    return report;
}

TwoRegularReport two_regular_distinct(const EngelParams& base) {
    require_even_spacing(base, "two_regular_distinct");
    const ShiftSequence& seq = base.seq();
    const int d = seq.d();

    std::vector<int> head(static_cast<std::size_t>(d - 1));
    for (int i = 1; i <= d - 1; ++i) head[static_cast<std::size_t>(i - 1)] = seq.sign_term(i);
    std::vector<int> alternating = head;
    for (const int s : head) alternating.push_back(-s);

    EngelParams plus(ShiftSequence(d, seq.abs_pattern(), head), base.a(), base.b_sq(), base.delta());
    EngelParams minus(ShiftSequence(d, seq.abs_pattern(), alternating), base.a(), base.b_sq(),
                      base.delta());

    TwoRegularReport report{
        plus, minus, is_regular(plus.seq()), is_regular(minus.seq()),
        kappa_invariant(plus.seq()), kappa_invariant(minus.seq()), false};
    report.distinct = report.kappa_plus != report.kappa_minus;
    return report;
}

}  // namespace engelset
