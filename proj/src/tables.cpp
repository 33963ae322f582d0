#include "engelset/tables.hpp"

#include <sstream>

namespace engelset {

Rational centered_residue(const Rational& x, const Rational& spacing) {
    if (spacing.sign() <= 0) throw ValidationError("spacing must be positive");
    // n = ceil(x/spacing - 1/2) places x - n*spacing in (-spacing/2, spacing/2]
    const Rational t = x / spacing - Rational(1, 2);
    const std::int64_t n = -floor_to_int64(-t);
    return x - Rational(n) * spacing;
}

namespace {

std::string height_string(const EngelParams& params, std::int64_t vlevel) {
    Rational root(0);
    if (exact_sqrt(params.unit_sq(), root)) {
        return (Rational(vlevel) * root).str();
    }
    return QuadRadius(Rational(0), Rational(vlevel), params.unit_sq()).str();
}

}  // namespace

std::vector<LayerCoset> layer_table(const EngelParams& params, std::int64_t m_min, std::int64_t m_max) {
    std::vector<LayerCoset> rows;
    const Rational spacing = Rational(2) * params.a();
    for (std::int64_t m = m_min; m <= m_max; ++m) {
        const SplitVector o = layer_origin(params, m);
        LayerCoset row;
        row.layer = m;
        row.residues.reserve(static_cast<std::size_t>(o.horiz.size()));
        for (Eigen::Index s = 0; s < o.horiz.size(); ++s) {
            row.residues.push_back(centered_residue(o.horiz[s], spacing));
        }
        row.height = height_string(params, o.vlevel);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string layer_table_csv(const EngelParams& params, std::int64_t m_min, std::int64_t m_max) {
    std::ostringstream out;
    out << "layer";
    for (int s = 1; s < params.d(); ++s) out << ",residue_" << s;
    out << ",height\n";
    for (const auto& row : layer_table(params, m_min, m_max)) {
        out << row.layer;
        for (const auto& r : row.residues) out << ',' << r.str();
        out << ',' << row.height << '\n';
    }
    return out.str();
}

}  // namespace engelset
