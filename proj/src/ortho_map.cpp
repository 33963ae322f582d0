#include "engelset/ortho_map.hpp"

#include "engelset/errors.hpp"

namespace engelset {

namespace {

bool exactly_orthogonal(const HMatrix& H) {
    if (H.rows() != H.cols()) return false;
    const HMatrix gram = H.transpose() * H;
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
        for (Eigen::Index j = 0; j < gram.cols(); ++j)
            if (!(gram(i, j) == Rational(i == j ? 1 : 0))) return false;
    return true;
}

}  // namespace

OrthoMap OrthoMap::identity(int d) {
    if (d < 2) throw ValidationError("orthogonal map needs dimension >= 2");
    HMatrix H(d - 1, d - 1);
    for (int i = 0; i < d - 1; ++i)
        for (int j = 0; j < d - 1; ++j) H(i, j) = Rational(i == j ? 1 : 0);
    return OrthoMap(std::move(H), +1);
}

std::optional<OrthoMap> OrthoMap::make(HMatrix H, int vsign) {
    if (vsign != 1 && vsign != -1) return std::nullopt;
    if (!exactly_orthogonal(H)) return std::nullopt;
    return OrthoMap(std::move(H), vsign);
}

OrthoMap OrthoMap::signed_permutation(const std::vector<int>& perm, const std::vector<int>& hsigns, int vsign) {
    const int n = static_cast<int>(perm.size());
    if (hsigns.size() != perm.size()) throw ValidationError("signed permutation size mismatch");
    HMatrix H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H(i, j) = Rational(0);
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (perm[s] < 0 || perm[s] >= n || seen[perm[s]]) throw ValidationError("not a permutation");
        if (hsigns[s] != 1 && hsigns[s] != -1) throw ValidationError("signed permutation sign must be +-1");
        seen[perm[s]] = true;
        H(perm[s], s) = Rational(hsigns[s]);
    }
    if (vsign != 1 && vsign != -1) throw ValidationError("vertical sign must be +-1");
    return OrthoMap(std::move(H), vsign);
}

OrthoMap OrthoMap::axis_flip(int d, int axis) {
    if (axis < 0 || axis >= d - 1) throw ValidationError("axis out of range");
    OrthoMap m = identity(d);
    m.horiz_(axis, axis) = Rational(-1);
    return m;
}

SplitVector OrthoMap::apply(const SplitVector& x) const {
    if (x.horiz.size() != horiz_.cols()) throw ValidationError("orthogonal map dimension mismatch");
    return SplitVector(horiz_ * x.horiz, vsign_ * x.vlevel);
}

OrthoMap OrthoMap::compose(const OrthoMap& other) const {
    if (horiz_.cols() != other.horiz_.rows()) throw ValidationError("orthogonal map dimension mismatch");
    return OrthoMap(horiz_ * other.horiz_, vsign_ * other.vsign_);
}

OrthoMap OrthoMap::inverse() const { return OrthoMap(horiz_.transpose(), vsign_); }

bool OrthoMap::is_identity() const {
    if (vsign_ != 1) return false;
    for (Eigen::Index i = 0; i < horiz_.rows(); ++i)
        for (Eigen::Index j = 0; j < horiz_.cols(); ++j)
            if (!(horiz_(i, j) == Rational(i == j ? 1 : 0))) return false;
    return true;
}

int OrthoMap::order(int guard) const {
    OrthoMap acc = *this;
    for (int k = 1; k <= guard; ++k) {
        if (acc.is_identity()) return k;
        acc = acc.compose(*this);
    }
    throw ValidationError("orthogonal map order exceeds guard");
}

RMatrix OrthoMap::full_matrix() const {
    const int d = dim();
    RMatrix M(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) = Rational(0);
    for (int i = 0; i < d - 1; ++i)
        for (int j = 0; j < d - 1; ++j) M(i, j) = horiz_(i, j);
    M(d - 1, d - 1) = Rational(vsign_);
    return M;
}

bool operator==(const OrthoMap& a, const OrthoMap& b) {
    if (a.vsign_ != b.vsign_ || a.horiz_.rows() != b.horiz_.rows()) return false;
    for (Eigen::Index i = 0; i < a.horiz_.rows(); ++i)
        for (Eigen::Index j = 0; j < a.horiz_.cols(); ++j)
            if (!(a.horiz_(i, j) == b.horiz_(i, j))) return false;
    return true;
}

}  // namespace engelset
