#pragma once

#include <optional>
#include <vector>

#include "engelset/split_vector.hpp"

namespace engelset {

// Exact orthogonal map acting on the split representation: a rational
// (d-1)x(d-1) orthogonal block on the horizontal coordinates and a sign on
// the vertical level. H^T H = I holds exactly (checked at construction).
// Maps mixing horizontal and vertical axes are not representable here; the
// layered sets this library builds never need them.
class OrthoMap {
public:
    static OrthoMap identity(int d);

    // Checked factory; nullopt when H is not exactly orthogonal or vsign is
    // not +-1.
    static std::optional<OrthoMap> make(HMatrix H, int vsign);

    // Horizontal signed permutation e_s -> hsigns[s] * e_{perm[s]} (0-based),
    // vertical sign vsign.
    static OrthoMap signed_permutation(const std::vector<int>& perm, const std::vector<int>& hsigns, int vsign);

    // Reflection of a single horizontal axis (0-based), identity elsewhere.
    static OrthoMap axis_flip(int d, int axis);

    int dim() const { return static_cast<int>(horiz_.rows()) + 1; }
    const HMatrix& horiz() const { return horiz_; }
    int vsign() const { return vsign_; }

    SplitVector apply(const SplitVector& x) const;
    OrthoMap compose(const OrthoMap& other) const;  // this after other
    OrthoMap inverse() const;
    bool is_identity() const;

    // Smallest k >= 1 with M^k = I. Orthogonal maps produced here have small
    // order; guards against runaway anyway.
    int order(int guard = 1 << 12) const;

    // Full (d x d) matrix in split coordinates; last diagonal entry is vsign.
    RMatrix full_matrix() const;

    friend bool operator==(const OrthoMap& a, const OrthoMap& b);

private:
    OrthoMap(HMatrix H, int vsign) : horiz_(std::move(H)), vsign_(vsign) {}

    HMatrix horiz_;
    int vsign_;
};

}  // namespace engelset
