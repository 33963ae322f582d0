#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "engelset/counting.hpp"
#include "engelset/onedim.hpp"
#include "engelset/params.hpp"
#include "engelset/regularity.hpp"
#include "engelset/window.hpp"

namespace engelset {

// Insertion-ordered JSON keeps emitted reports byte-stable across runs.
using Json = nlohmann::ordered_json;

// Parameter files: {d, abs_pattern, period (optional), signs, a,
// b or b_sq, b_prime (optional, with b), delta}; rationals as strings.
Json params_to_json(const EngelParams& params);
EngelParams params_from_json(const Json& j);
EngelParams params_from_json_text(const std::string& text);

// CSV columns: layer, horiz_1 .. horiz_{d-1}, vlevel. Rows in window
// iteration order (layer-ascending, offset-lexicographic).
std::string window_to_csv(const LayerWindow& window);

// Parses the same CSV shape back into (layer, point) rows. Arbitrary
// rational point sets are accepted; only the column count must agree.
std::vector<std::pair<std::int64_t, SplitVector>> points_from_csv(const std::string& text);

Json rational_json(const Rational& r);
Json quad_to_json(const QuadRadius& q);
Json split_vector_to_json(const SplitVector& x);
Json witness_to_json(const IsometryWitness& w);
Json matrix_to_json(const RMatrix& m);

Json class_report_to_json(const ClassReport& report);
Json cluster_group_to_json(const ClusterGroup& group);
Json lineset_to_json(const LineSet& set);

Json regularity_verdict_to_json(const RegularityVerdict& v);
Json hypothesis_report_to_json(const HypothesisReport& report);
Json group_prediction_to_json(const GroupPrediction& prediction);
Json packing_report_to_json(const PackingReport& report);
Json covering_report_to_json(const CoveringReport& report);
Json enreg_report_to_json(const EquivalenceCheckReport& report);
Json two_regular_report_to_json(const TwoRegularReport& report);

}  // namespace engelset
