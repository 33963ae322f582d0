#include "engelset/equivalence.hpp"

#include <algorithm>
#include <numeric>

#include "engelset/errors.hpp"

namespace engelset {

namespace {

// Rank arguments use the rational embedding (horiz, vlevel): for any
// positive vertical unit, linear dependence over R of split vectors is
// dependence of these rational vectors.
RMatrix embed_rows(const Cluster& c, const std::vector<std::size_t>& idx) {
    const int d = c.dim();
    RMatrix m(static_cast<Eigen::Index>(idx.size()), d);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const SplitVector& v = c.rel[idx[r]];
        for (Eigen::Index s = 0; s + 1 < d; ++s) m(static_cast<Eigen::Index>(r), s) = v.horiz[s];
        m(static_cast<Eigen::Index>(r), d - 1) = Rational(v.vlevel);
    }
    return m;
}

int rank_of(const Cluster& c, const std::vector<std::size_t>& idx) {
    if (idx.empty()) return 0;
    return static_cast<int>(Eigen::FullPivLU<RMatrix>(embed_rows(c, idx)).rank());
}

// Maximal independent subset, preferring points from small distance classes
// (their images have the fewest candidates). Deterministic.
std::vector<std::size_t> greedy_basis(const Cluster& c) {
    const std::size_t n = c.rel.size();
    std::vector<std::size_t> class_size(n);
    for (const auto& [b, e] : c.dist_classes) {
        for (std::size_t i = b; i < e; ++i) class_size[i] = e - b;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return class_size[i] < class_size[j]; });

    std::vector<std::size_t> basis;
    int rank = 0;
    const int d = c.dim();
    for (std::size_t i : order) {
        if (rank == d) break;
        basis.push_back(i);
        const int r2 = rank_of(c, basis);
        if (r2 > rank) {
            rank = r2;
        } else {
            basis.pop_back();
        }
    }
    return basis;
}

int set_rank(const Cluster& c) {
    std::vector<std::size_t> basis;
    int rank = 0;
    const int d = c.dim();
    for (std::size_t i = 0; i < c.rel.size(); ++i) {
        if (rank == d) break;
        basis.push_back(i);
        const int r2 = rank_of(c, basis);
        if (r2 > rank) {
            rank = r2;
        } else {
            basis.pop_back();
        }
    }
    return rank;
}

// Backtracking search for Gram-preserving bijections between two clusters
// with identical distance profiles. Only basis points are branched on;
// everything else follows from inner products against the basis.
class Matcher {
public:
    Matcher(const Cluster& a, const Cluster& b) : A_(a), B_(b) {}

    bool feasible() const {
        return A_.dim() == B_.dim() && A_.unit_sq == B_.unit_sq && A_.rel.size() == B_.rel.size() &&
               A_.rel_sq == B_.rel_sq;
    }

    void prepare() {
        basis_ = greedy_basis(A_);
        rank_ = static_cast<int>(basis_.size());
        rank_b_ = (&A_ == &B_) ? rank_ : set_rank(B_);

        const std::size_t r = basis_.size();
        gram_.assign(r * r, Rational(0));
        for (std::size_t t = 0; t < r; ++t) {
            for (std::size_t u = 0; u <= t; ++u) {
                gram_[t * r + u] = dot(A_.rel[basis_[t]], A_.rel[basis_[u]], A_.unit_sq);
            }
        }

        const std::size_t n = A_.rel.size();
        ssig_.resize(n * r);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t = 0; t < r; ++t) {
                ssig_[i * r + t] = dot(A_.rel[i], A_.rel[basis_[t]], A_.unit_sq);
            }
        }

        class_range_.resize(n);
        for (const auto& cls : A_.dist_classes) {
            for (std::size_t i = cls.first; i < cls.second; ++i) class_range_[i] = cls;
        }
    }

    int rank_src() const { return rank_; }
    int rank_dst() const { return rank_b_; }

    std::optional<IsometryWitness> find_one() {
        std::vector<IsometryWitness> out;
        descend(0, false, out);
        if (out.empty()) return std::nullopt;
        return std::move(out.front());
    }

    std::vector<IsometryWitness> find_all() {
        std::vector<IsometryWitness> out;
        descend(0, true, out);
        return out;
    }

private:
    // true = stop the search (single-witness mode succeeded)
    bool descend(std::size_t t, bool all, std::vector<IsometryWitness>& out) {
        if (t == basis_.size()) {
            auto bij = propagate();
            if (!bij) return false;
            IsometryWitness w;
            w.bijection = std::move(*bij);
            w.map = recover_map(w.bijection);
            out.push_back(std::move(w));
            return !all;
        }
        const auto [cb, ce] = class_range_[basis_[t]];
        for (std::size_t j = cb; j < ce; ++j) {
            if (std::find(img_.begin(), img_.end(), j) != img_.end()) continue;
            bool ok = true;
            for (std::size_t u = 0; u < t && ok; ++u) {
                ok = dot(B_.rel[j], B_.rel[img_[u]], B_.unit_sq) == gram_[t * basis_.size() + u];
            }
            if (!ok) continue;
            img_.push_back(j);
            const bool stop = descend(t + 1, all, out);
            img_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    // With basis images fixed, every point's inner products against the
    // basis pin it down on both sides; match the signatures.
    std::optional<std::vector<std::size_t>> propagate() const {
        const std::size_t n = A_.rel.size();
        const std::size_t r = basis_.size();

        std::vector<Rational> dsig(n * r);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t t = 0; t < r; ++t) {
                dsig[j * r + t] = dot(B_.rel[j], B_.rel[img_[t]], B_.unit_sq);
            }
        }

        // order target indices by (norm, signature) lexicographically
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto cmp_rows = [&](std::size_t j, std::size_t k) {
            if (B_.rel_sq[j] != B_.rel_sq[k]) return B_.rel_sq[j] < B_.rel_sq[k];
            for (std::size_t t = 0; t < r; ++t) {
                if (dsig[j * r + t] != dsig[k * r + t]) return dsig[j * r + t] < dsig[k * r + t];
            }
            return false;
        };
        std::sort(order.begin(), order.end(), cmp_rows);

        std::vector<std::size_t> bij(n);
        for (std::size_t i = 0; i < n; ++i) {
            // binary search for the unique target with this signature
            auto key_less_than = [&](std::size_t j) {
                if (B_.rel_sq[j] != A_.rel_sq[i]) return B_.rel_sq[j] < A_.rel_sq[i];
                for (std::size_t t = 0; t < r; ++t) {
                    if (dsig[j * r + t] != ssig_[i * r + t]) return dsig[j * r + t] < ssig_[i * r + t];
                }
                return false;
            };
            auto it = std::lower_bound(order.begin(), order.end(), 0,
                                       [&](std::size_t j, int) { return key_less_than(j); });
            if (it == order.end()) return std::nullopt;
            const std::size_t j = *it;
            if (B_.rel_sq[j] != A_.rel_sq[i]) return std::nullopt;
            for (std::size_t t = 0; t < r; ++t) {
                if (dsig[j * r + t] != ssig_[i * r + t]) return std::nullopt;
            }
            bij[i] = j;
        }
        return bij;
    }

    // Split-block orthogonal map with map(rel[i]) = target rel[bij[i]] for
    // every i, if one exists; exactness makes the verification a proof.
    std::optional<OrthoMap> recover_map(const std::vector<std::size_t>& bij) const {
        const int d = A_.dim();
        if (rank_ < d) return std::nullopt;

        int sigma = 0;
        for (std::size_t t = 0; t < basis_.size(); ++t) {
            const std::int64_t v = A_.rel[basis_[t]].vlevel;
            const std::int64_t w = B_.rel[bij[basis_[t]]].vlevel;
            if (v == 0) {
                if (w != 0) return std::nullopt;
                continue;
            }
            int cand;
            if (w == v) {
                cand = 1;
            } else if (w == -v) {
                cand = -1;
            } else {
                return std::nullopt;
            }
            if (sigma != 0 && cand != sigma) return std::nullopt;
            sigma = cand;
        }
        if (sigma == 0) return std::nullopt;

        // pick d-1 basis members with independent horizontal parts
        const int h = d - 1;
        HMatrix acols(h, h);
        HMatrix bcols(h, h);
        int got = 0;
        for (std::size_t t = 0; t < basis_.size() && got < h; ++t) {
            acols.col(got) = A_.rel[basis_[t]].horiz;
            if (Eigen::FullPivLU<HMatrix>(acols.leftCols(got + 1)).rank() == got + 1) {
                bcols.col(got) = B_.rel[bij[basis_[t]]].horiz;
                ++got;
            }
        }
        if (got < h) return std::nullopt;

        const HMatrix H = bcols * Eigen::FullPivLU<HMatrix>(acols).inverse();
        auto om = OrthoMap::make(H, sigma);
        if (!om) return std::nullopt;

        for (std::size_t i = 0; i < A_.rel.size(); ++i) {
            if (om->apply(A_.rel[i]) != B_.rel[bij[i]]) return std::nullopt;
        }
        return om;
    }

    const Cluster& A_;
    const Cluster& B_;
    std::vector<std::size_t> basis_;
    int rank_ = 0;
    int rank_b_ = 0;
    std::vector<Rational> gram_;  // basis Gram, lower triangle used
    std::vector<Rational> ssig_;  // source signatures vs basis, row-major
    std::vector<std::pair<std::size_t, std::size_t>> class_range_;
    std::vector<std::size_t> img_;
};

}  // namespace

std::optional<IsometryWitness> clusters_equivalent(const Cluster& src, const Cluster& dst) {
    if (src.unit_sq.sign() <= 0) throw ValidationError("vertical unit must be positive");
    Matcher m(src, dst);
    if (!m.feasible()) return std::nullopt;
    if (src.rel.empty()) return IsometryWitness{};
    m.prepare();
    if (m.rank_src() != m.rank_dst()) return std::nullopt;
    return m.find_one();
}

ClusterGroup cluster_group(const Cluster& c) {
    if (c.unit_sq.sign() <= 0) throw ValidationError("vertical unit must be positive");
    ClusterGroup g;
    if (c.rel.empty()) return g;
    Matcher m(c, c);
    m.prepare();
    if (m.rank_src() < c.dim()) return g;
    g.spanning = true;
    g.elements = m.find_all();
    return g;
}

bool verify_witness(const Cluster& src, const Cluster& dst, const IsometryWitness& w,
                    std::size_t pair_budget) {
    const std::size_t n = src.rel.size();
    if (dst.rel.size() != n || w.bijection.size() != n) return false;
    if (src.unit_sq != dst.unit_sq || src.dim() != dst.dim()) return false;

    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = w.bijection[i];
        if (j >= n || hit[j]) return false;
        hit[j] = true;
        if (src.rel_sq[i] != dst.rel_sq[j]) return false;
    }

    if (w.map) {
        if (w.map->dim() != src.dim()) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (w.map->apply(src.rel[i]) != dst.rel[w.bijection[i]]) return false;
        }
    }

    auto pair_ok = [&](std::size_t i, std::size_t j) {
        return dot(src.rel[i], src.rel[j], src.unit_sq) ==
               dot(dst.rel[w.bijection[i]], dst.rel[w.bijection[j]], dst.unit_sq);
    };

    if (n >= 2) {
        const std::size_t total = n * (n - 1) / 2;
        if (total <= pair_budget) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!pair_ok(i, j)) return false;
                }
            }
        } else {
            // deterministic sample; the map check above is complete when present
            std::uint64_t state = 0x9e3779b97f4a7c15ull;
            for (std::size_t k = 0; k < pair_budget; ++k) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                const std::size_t i = static_cast<std::size_t>((state >> 33) % n);
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                const std::size_t j = static_cast<std::size_t>((state >> 33) % n);
                if (i != j && !pair_ok(i, j)) return false;
            }
        }
    }
    return true;
}

IsometryWitness invert_witness(const IsometryWitness& w) {
    IsometryWitness out;
    out.bijection.resize(w.bijection.size());
    for (std::size_t i = 0; i < w.bijection.size(); ++i) out.bijection[w.bijection[i]] = i;
    if (w.map) out.map = w.map->inverse();
    return out;
}

IsometryWitness compose_witness(const IsometryWitness& first, const IsometryWitness& then) {
    if (first.bijection.size() != then.bijection.size()) {
        throw ValidationError("witness sizes do not compose");
    }
    IsometryWitness out;
    out.bijection.resize(first.bijection.size());
    for (std::size_t i = 0; i < first.bijection.size(); ++i) {
        out.bijection[i] = then.bijection[first.bijection[i]];
    }
    if (first.map && then.map) out.map = then.map->compose(*first.map);
    return out;
}

}  // namespace engelset
