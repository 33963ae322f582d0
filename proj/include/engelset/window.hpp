#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "engelset/params.hpp"
#include "engelset/split_vector.hpp"

namespace engelset {

// Anchor point of layer m. Layer m is origin(m) + 2a Z^{d-1} x {0}.
// origin(0) = 0; stepping m-1 -> m adds the vertical gap, plus delta * u_{m/2}
// on even m (rule E4). Negative layers invert the same rules.
SplitVector layer_origin(const EngelParams& params, std::int64_t m);

struct WindowSpec {
    std::int64_t m_min;
    std::int64_t m_max;
    std::int64_t L;
};

// Smallest window certified to contain every set point of the closed rho-ball
// around any point of layer p whose horizontal offset from origin(p) stays
// within the lattice box: layers p-K..p+K with K = max{j >= 0 : (2bj)^2 <= rho^2},
// and lattice box half-width L = ceil((rho + K delta) / 2a) + 1.
WindowSpec required_window(const EngelParams& params, std::int64_t p, const QuadRadius& rho_sq);

// Horizontal axes consumed by the E4 rule inside layers [p-k, p+k]:
// { |a_i| : both layers 2i-1, 2i lie in the range }. Returned sorted,
// 1-based. For k = d-1 this is all of 1..d-1.
std::vector<int> basis_used(const EngelParams& params, std::int64_t p, int k);

// Resource guard: default 10^6 points, overridable by the
// ENGELSET_MAX_POINTS environment variable or an explicit cap argument.
std::uint64_t default_point_cap();

// Finite rectangular window of the set: layers m_min..m_max, each holding
// lattice offsets (m_1, .., m_{d-1}) in [-L, L]^{d-1} around its origin.
// Points are implicit (origin + 2a * offset); nothing is materialized until
// asked for. Iteration order is layer-ascending, then offset-lexicographic,
// which makes every dump deterministic.
class LayerWindow {
public:
    static LayerWindow generate(EngelParams params, std::int64_t m_min, std::int64_t m_max, std::int64_t L,
                                std::uint64_t max_points);

    const EngelParams& params() const { return params_; }
    std::int64_t m_min() const { return m_min_; }
    std::int64_t m_max() const { return m_max_; }
    std::int64_t L() const { return L_; }
    std::uint64_t point_count() const { return point_count_; }
    bool contains_layer(std::int64_t m) const { return m >= m_min_ && m <= m_max_; }

    const SplitVector& origin(std::int64_t m) const;

    SplitVector point_at(std::int64_t m, const std::vector<std::int64_t>& offsets) const;

    // f(layer, point); visits the whole window.
    void for_each_point(const std::function<void(std::int64_t, const SplitVector&)>& f) const;

    // Materializes one layer, offset-lexicographic order.
    std::vector<SplitVector> layer_points(std::int64_t m) const;

private:
    LayerWindow(EngelParams params, std::int64_t m_min, std::int64_t m_max, std::int64_t L);

    EngelParams params_;
    std::int64_t m_min_;
    std::int64_t m_max_;
    std::int64_t L_;
    std::uint64_t point_count_;
    std::vector<SplitVector> origins_;
};

LayerWindow generate_window(const EngelParams& params, std::int64_t m_min, std::int64_t m_max, std::int64_t L);
LayerWindow generate_window(const EngelParams& params, const WindowSpec& spec,
                            std::uint64_t max_points = default_point_cap());

}  // namespace engelset
