#pragma once

#include <string>
#include <vector>

#include "engelset/window.hpp"

namespace engelset {

// Representative of x modulo spacing, reduced to (-spacing/2, spacing/2].
Rational centered_residue(const Rational& x, const Rational& spacing);

// One layer of the set described as a coset: every point of layer m is
// (residues + 2a Z^{d-1}) x {height}.
struct LayerCoset {
    std::int64_t layer;
    std::vector<Rational> residues;
    std::string height;  // exact vertical coordinate, rational or q*sqrt(s) form
};

std::vector<LayerCoset> layer_table(const EngelParams& params, std::int64_t m_min, std::int64_t m_max);

// CSV with header layer,residue_1..residue_{d-1},height and one row per
// layer, ascending. Residues are centered; heights exact.
std::string layer_table_csv(const EngelParams& params, std::int64_t m_min, std::int64_t m_max);

}  // namespace engelset
