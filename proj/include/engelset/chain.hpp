#pragma once

#include "engelset/window.hpp"

namespace engelset {

// j-th point of the layer chain through x in layer p: x_0 = x, and each step
// x_j -> x_{j+1} adds the vertical gap plus, when the target layer is even,
// the delta shift of rule E4. x_j always lies in layer p + j, and is the
// nearest point of that layer to both chain neighbors.
SplitVector chain_point(const EngelParams& params, std::int64_t p, const SplitVector& x, std::int64_t j);

struct ChainStep {
    std::int64_t j;
    Rational back_sq;  // |x_j - x_{j-1}|^2
    Rational fwd_sq;   // |x_{j+1} - x_j|^2
    bool unique_back;  // x_j is the unique nearest point of its layer to x_{j-1}
    bool unique_fwd;   //                            ... to x_{j+1}
};

// Computes adjacent-step squared distances along the chain for j in
// [j_min, j_max] and certifies nearest-point uniqueness by scanning the
// window's layers. The window must contain layers p+j_min .. p+j_max and
// extend horizontally at least 2a beyond each chain neighbor; otherwise
// the scan could miss a competitor and an InsufficientWindowError is thrown.
std::vector<ChainStep> chain_profile(const LayerWindow& window, std::int64_t p, const SplitVector& x,
                                     std::int64_t j_min, std::int64_t j_max);

}  // namespace engelset
