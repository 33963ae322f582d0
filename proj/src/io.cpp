#include "engelset/io.hpp"

#include <cstddef>
#include <sstream>

#include "engelset/errors.hpp"

namespace engelset {

namespace {

Rational rational_field(const Json& j, const char* key) {
    if (!j.contains(key)) {
        throw ValidationError(std::string("parameter file: missing field '") + key + "'");
    }
    const Json& v = j.at(key);
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long long>(v.get<std::int64_t>()));
    throw ValidationError(std::string("parameter file: field '") + key +
                          "' must be a rational string or an integer");
}

std::vector<int> int_array_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw ValidationError(std::string("parameter file: missing array field '") + key + "'");
    }
    std::vector<int> out;
    for (const Json& e : j.at(key)) {
        if (!e.is_number_integer()) {
            throw ValidationError(std::string("parameter file: '") + key + "' must hold integers");
        }
        out.push_back(e.get<int>());
    }
    return out;
}

}  // namespace

Json params_to_json(const EngelParams& params) {
    Json j;
    j["d"] = params.d();
    j["abs_pattern"] = params.seq().abs_pattern();
    j["period"] = params.seq().period();
    j["signs"] = params.seq().signs();
    j["a"] = params.a().str();
    if (params.b_is_rational()) {
        j["b"] = params.b_exact().str();
    } else {
        j["b_sq"] = params.b_sq().str();
    }
    if (params.uneven_spacing()) {
        j["b_prime"] = params.b_prime_exact().str();
    }
    j["delta"] = params.delta().str();
    return j;
}

EngelParams params_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ValidationError("parameter file: top level must be a JSON object");
    }
    if (!j.contains("d") || !j.at("d").is_number_integer()) {
        throw ValidationError("parameter file: missing integer field 'd'");
    }
    const int d = j.at("d").get<int>();
    const std::vector<int> abs_pattern = int_array_field(j, "abs_pattern");
    const std::vector<int> signs = int_array_field(j, "signs");
    if (j.contains("period")) {
        if (!j.at("period").is_number_integer() ||
            j.at("period").get<std::int64_t>() != static_cast<std::int64_t>(signs.size())) {
            throw ValidationError("parameter file: 'period' must equal the length of 'signs'");
        }
    }
    ShiftSequence seq(d, abs_pattern, signs);

    const Rational a = rational_field(j, "a");
    const Rational delta = rational_field(j, "delta");
    const bool has_b = j.contains("b");
    const bool has_b_sq = j.contains("b_sq");
    const bool has_b_prime = j.contains("b_prime");
    if (has_b == has_b_sq) {
        throw ValidationError("parameter file: exactly one of 'b' and 'b_sq' is required");
    }
    if (has_b_prime && !has_b) {
        throw ValidationError("parameter file: 'b_prime' requires 'b'");
    }
    if (has_b_prime) {
        return EngelParams::uneven(std::move(seq), a, rational_field(j, "b"),
                                   rational_field(j, "b_prime"), delta);
    }
    if (has_b) {
        return EngelParams::with_b(std::move(seq), a, rational_field(j, "b"), delta);
    }
    return EngelParams(std::move(seq), a, rational_field(j, "b_sq"), delta);
}

EngelParams params_from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("parameter file: invalid JSON: ") + e.what());
    }
    return params_from_json(j);
}

std::string window_to_csv(const LayerWindow& window) {
    std::ostringstream out;
    out << "layer";
    for (int i = 1; i < window.params().d(); ++i) out << ",horiz_" << i;
    out << ",vlevel\n";
    window.for_each_point([&](std::int64_t m, const SplitVector& p) {
        out << m;
        for (Eigen::Index i = 0; i < p.horiz.size(); ++i) out << ',' << p.horiz[i].str();
        out << ',' << p.vlevel << '\n';
    });
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::int64_t parse_int_cell(const std::string& cell, const char* what) {
    const Rational r = Rational::parse(cell);
    if (!r.is_integer()) {
        throw ValidationError(std::string("point CSV: ") + what + " must be an integer, got '" + cell + "'");
    }
    return floor_to_int64(r);
}

}  // namespace

std::vector<std::pair<std::int64_t, SplitVector>> points_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("point CSV: empty input");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 3 || header.front() != "layer" || header.back() != "vlevel") {
        throw ValidationError("point CSV: header must be layer,horiz_1,..,vlevel");
    }
    const std::size_t width = header.size();

    std::vector<std::pair<std::int64_t, SplitVector>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != width) {
            throw ValidationError("point CSV: row width does not match the header");
        }
        SplitVector p;
        p.horiz.resize(static_cast<Eigen::Index>(width - 2));
        for (std::size_t i = 1; i + 1 < width; ++i) {
            p.horiz[static_cast<Eigen::Index>(i - 1)] = Rational::parse(cells[i]);
        }
        p.vlevel = parse_int_cell(cells.back(), "vlevel");
        rows.emplace_back(parse_int_cell(cells.front(), "layer"), std::move(p));
    }
    return rows;
}

Json rational_json(const Rational& r) { return Json(r.str()); }

Json quad_to_json(const QuadRadius& q) {
    Json j;
    j["u"] = q.u.str();
    j["v"] = q.v.str();
    j["D"] = q.D.str();
    j["text"] = q.str();
    return j;
}

Json split_vector_to_json(const SplitVector& x) {
    Json j;
    Json horiz = Json::array();
    for (Eigen::Index i = 0; i < x.horiz.size(); ++i) horiz.push_back(x.horiz[i].str());
    j["horiz"] = std::move(horiz);
    j["vlevel"] = x.vlevel;
    return j;
}

Json matrix_to_json(const RMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json witness_to_json(const IsometryWitness& w) {
    Json j;
    j["bijection"] = w.bijection;
    j["matrix"] = w.map ? matrix_to_json(w.map->full_matrix()) : Json(nullptr);
    return j;
}

Json class_report_to_json(const ClassReport& report) {
    Json j;
    j["rho_sq"] = quad_to_json(report.rho_sq);
    j["n_classes"] = report.n_classes;

    Json reps = Json::array();
    for (const auto& rep : report.reps) {
        Json r;
        r["layer"] = rep.layer;
        r["center"] = split_vector_to_json(rep.center);
        r["cluster_size"] = rep.cluster_size;
        r["class_id"] = rep.class_id;
        reps.push_back(std::move(r));
    }
    j["representatives"] = std::move(reps);

    Json classes = Json::array();
    for (int c = 0; c < report.n_classes; ++c) {
        Json members = Json::array();
        for (std::size_t i = 0; i < report.reps.size(); ++i) {
            if (report.reps[i].class_id == c) members.push_back(i);
        }
        classes.push_back(std::move(members));
    }
    j["classes"] = std::move(classes);

    Json witnesses = Json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back(w ? witness_to_json(*w) : Json(nullptr));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json cluster_group_to_json(const ClusterGroup& group) {
    Json j;
    j["spanning"] = group.spanning;
    j["order"] = group.order();
    Json elements = Json::array();
    for (const auto& w : group.elements) elements.push_back(witness_to_json(w));
    j["elements"] = std::move(elements);
    return j;
}

Json lineset_to_json(const LineSet& set) {
    Json j = Json::array();
    for (const Rational& p : set.points) j.push_back(p.str());
    return j;
}

Json regularity_verdict_to_json(const RegularityVerdict& v) {
    Json j;
    j["regular"] = v.regular;
    j["tau"] = v.tau ? Json(*v.tau) : Json(nullptr);
    return j;
}

Json hypothesis_report_to_json(const HypothesisReport& report) {
    Json j;
    j["eps"] = report.eps.str();
    j["all_hold"] = report.all_hold();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e;
        e["name"] = c.name;
        e["relation"] = c.relation;
        e["lhs"] = quad_to_json(c.lhs);
        e["rhs"] = quad_to_json(c.rhs);
        e["holds"] = c.holds;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json group_prediction_to_json(const GroupPrediction& prediction) {
    Json j;
    j["k"] = prediction.k;
    j["applicable"] = prediction.applicable;
    j["sufficient_form"] = prediction.sufficient_form;
    j["radius"] = quad_to_json(prediction.radius);
    j["radius_bound"] = quad_to_json(prediction.radius_bound);
    j["free_axes"] = prediction.free_axes;
    j["predicted_order"] = prediction.predicted_order;
    Json gens = Json::array();
    for (const auto& g : prediction.generators) gens.push_back(matrix_to_json(g.full_matrix()));
    j["generators"] = std::move(gens);
    return j;
}

Json packing_report_to_json(const PackingReport& report) {
    Json j;
    j["ok"] = report.ok;
    j["min_sq"] = report.min_sq ? rational_json(*report.min_sq) : Json(nullptr);
    if (report.closest) {
        Json pair = Json::array();
        pair.push_back(split_vector_to_json(report.closest->first));
        pair.push_back(split_vector_to_json(report.closest->second));
        j["closest"] = std::move(pair);
    } else {
        j["closest"] = nullptr;
    }
    return j;
}

Json covering_report_to_json(const CoveringReport& report) {
    Json j;
    j["samples"] = report.samples;
    j["ok"] = report.ok;
    j["max_nearest_sq"] = report.max_nearest_sq.str();
    j["sharp_ok"] = report.sharp_ok;
    j["sharp_sq"] = report.sharp_sq.str();
    return j;
}

Json enreg_report_to_json(const EquivalenceCheckReport& report) {
    Json j;
    j["verdict"] = regularity_verdict_to_json(report.verdict);
    j["n_at_2dR"] = report.n_at_2dR;
    j["consistent"] = report.consistent;
    j["classes"] = class_report_to_json(report.classes);
    return j;
}

Json two_regular_report_to_json(const TwoRegularReport& report) {
    Json j;
    j["plus"] = params_to_json(report.plus);
    j["minus"] = params_to_json(report.minus);
    j["plus_verdict"] = regularity_verdict_to_json(report.plus_verdict);
    j["minus_verdict"] = regularity_verdict_to_json(report.minus_verdict);
    j["kappa_plus"] = report.kappa_plus;
    j["kappa_minus"] = report.kappa_minus;
    j["distinct"] = report.distinct;
    return j;
}

}  // namespace engelset
