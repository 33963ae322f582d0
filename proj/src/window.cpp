#include "engelset/window.hpp"

#include <cstdlib>
#include <string>

namespace engelset {

SplitVector layer_origin(const EngelParams& params, std::int64_t m) {
    const int hd = params.d() - 1;
    HVector h(hd);
    for (int s = 0; s < hd; ++s) h[s] = Rational(0);
    if (m > 0) {
        for (std::int64_t t = 1; t <= m; ++t) {
            if (t % 2 == 0) {
                const auto u = params.seq().shift_unit(t / 2);
                h[u.axis - 1] += Rational(u.sign) * params.delta();
            }
        }
    } else if (m < 0) {
        for (std::int64_t t = 0; t > m; --t) {
            if (t % 2 == 0) {
                const auto u = params.seq().shift_unit(t / 2);
                h[u.axis - 1] -= Rational(u.sign) * params.delta();
            }
        }
    }
    return SplitVector(std::move(h), params.layer_vlevel(m));
}

WindowSpec required_window(const EngelParams& params, std::int64_t p, const QuadRadius& rho_sq) {
    require_even_spacing(params, "window sizing");
    if (sign_of(rho_sq) < 0) throw ValidationError("negative squared radius");

    std::int64_t K = 0;
    while (true) {
        const Rational step = Rational(4) * params.b_sq() * Rational((K + 1) * (K + 1));
        if (cmp_rational_quad(step, rho_sq) <= 0)
            ++K;
        else
            break;
        if (K > 1'000'000) throw ResourceCapError("radius spans over 10^6 layers");
    }

    std::int64_t t = 0;
    while (true) {
        const Rational reach = Rational(2) * params.a() * Rational(t) - Rational(K) * params.delta();
        if (reach.sign() >= 0 && cmp_rational_quad(reach * reach, rho_sq) >= 0) break;
        ++t;
        if (t > 100'000'000) throw ResourceCapError("radius spans over 10^8 lattice cells");
    }
    return WindowSpec{p - K, p + K, t + 1};
}

std::vector<int> basis_used(const EngelParams& params, std::int64_t p, int k) {
    if (k < 0) throw ValidationError("negative layer span");
    // E4 links X_{2i-1} -> X_{2i} with 2i in [p-k+1, p+k].
    const auto floordiv = [](std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    };
    const std::int64_t i_lo = floordiv(p - k + 1 + 1, 2);  // ceil((p-k+1)/2)
    const std::int64_t i_hi = floordiv(p + k, 2);
    std::vector<int> axes;
    for (std::int64_t i = i_lo; i <= i_hi; ++i) {
        const int axis = params.seq().abs_term(i);
        bool seen = false;
        for (int a : axes) seen = seen || (a == axis);
        if (!seen) axes.push_back(axis);
    }
    std::sort(axes.begin(), axes.end());
    return axes;
}

std::uint64_t default_point_cap() {
    if (const char* env = std::getenv("ENGELSET_MAX_POINTS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return 1'000'000u;
}

LayerWindow::LayerWindow(EngelParams params, std::int64_t m_min, std::int64_t m_max, std::int64_t L)
    : params_(std::move(params)), m_min_(m_min), m_max_(m_max), L_(L) {
    origins_.reserve(static_cast<std::size_t>(m_max_ - m_min_ + 1));
    for (std::int64_t m = m_min_; m <= m_max_; ++m) origins_.push_back(layer_origin(params_, m));
    mpz_class per_layer = 2 * L_ + 1;
    mpz_pow_ui(per_layer.get_mpz_t(), per_layer.get_mpz_t(), static_cast<unsigned>(params_.d() - 1));
    const mpz_class total = per_layer * (m_max_ - m_min_ + 1);
    point_count_ = total.fits_ulong_p() ? static_cast<std::uint64_t>(total.get_ui()) : ~0ull;
}

LayerWindow LayerWindow::generate(EngelParams params, std::int64_t m_min, std::int64_t m_max, std::int64_t L,
                                  std::uint64_t max_points) {
    if (m_min > m_max) throw ValidationError("empty layer range");
    if (L < 0) throw ValidationError("negative lattice half-width");
    LayerWindow w(std::move(params), m_min, m_max, L);
    if (w.point_count_ > max_points)
        throw ResourceCapError("window of " + std::to_string(w.point_count_) + " points exceeds cap of " +
                               std::to_string(max_points) + " (set ENGELSET_MAX_POINTS to raise)");
    return w;
}

const SplitVector& LayerWindow::origin(std::int64_t m) const {
    if (!contains_layer(m)) throw InsufficientWindowError("layer " + std::to_string(m) + " outside window");
    return origins_[static_cast<std::size_t>(m - m_min_)];
}

SplitVector LayerWindow::point_at(std::int64_t m, const std::vector<std::int64_t>& offsets) const {
    const SplitVector& o = origin(m);
    if (static_cast<int>(offsets.size()) != params_.d() - 1) throw ValidationError("offset arity mismatch");
    SplitVector p = o;
    const Rational spacing = Rational(2) * params_.a();
    for (std::size_t s = 0; s < offsets.size(); ++s) {
        if (offsets[s] < -L_ || offsets[s] > L_) throw InsufficientWindowError("offset outside window box");
        p.horiz[static_cast<Eigen::Index>(s)] += Rational(offsets[s]) * spacing;
    }
    return p;
}

void LayerWindow::for_each_point(const std::function<void(std::int64_t, const SplitVector&)>& f) const {
    const int hd = params_.d() - 1;
    const Rational spacing = Rational(2) * params_.a();
    std::vector<std::int64_t> off(static_cast<std::size_t>(hd), -L_);
    for (std::int64_t m = m_min_; m <= m_max_; ++m) {
        const SplitVector& o = origin(m);
        std::fill(off.begin(), off.end(), -L_);
        SplitVector p = o;
        while (true) {
            for (int s = 0; s < hd; ++s) p.horiz[s] = o.horiz[s] + Rational(off[static_cast<std::size_t>(s)]) * spacing;
            f(m, p);
            int s = hd - 1;
            while (s >= 0 && off[static_cast<std::size_t>(s)] == L_) {
                off[static_cast<std::size_t>(s)] = -L_;
                --s;
            }
            if (s < 0) break;
            ++off[static_cast<std::size_t>(s)];
        }
    }
}

std::vector<SplitVector> LayerWindow::layer_points(std::int64_t m) const {
    std::vector<SplitVector> pts;
    const int hd = params_.d() - 1;
    const Rational spacing = Rational(2) * params_.a();
    const SplitVector& o = origin(m);
    std::vector<std::int64_t> off(static_cast<std::size_t>(hd), -L_);
    while (true) {
        SplitVector p = o;
        for (int s = 0; s < hd; ++s) p.horiz[s] = o.horiz[s] + Rational(off[static_cast<std::size_t>(s)]) * spacing;
        pts.push_back(std::move(p));
        int s = hd - 1;
        while (s >= 0 && off[static_cast<std::size_t>(s)] == L_) {
            off[static_cast<std::size_t>(s)] = -L_;
            --s;
        }
        if (s < 0) break;
        ++off[static_cast<std::size_t>(s)];
    }
    return pts;
}

LayerWindow generate_window(const EngelParams& params, std::int64_t m_min, std::int64_t m_max, std::int64_t L) {
    return LayerWindow::generate(params, m_min, m_max, L, default_point_cap());
}

LayerWindow generate_window(const EngelParams& params, const WindowSpec& spec, std::uint64_t max_points) {
    return LayerWindow::generate(params, spec.m_min, spec.m_max, spec.L, max_points);
}

}  // namespace engelset
