#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "engelset/equivalence.hpp"
#include "engelset/errors.hpp"
#include "engelset/io.hpp"
#include "engelset/onedim.hpp"
#include "engelset/presets.hpp"
#include "engelset/regularity.hpp"
#include "engelset/svg.hpp"
#include "engelset/tables.hpp"

namespace {

using engelset::EngelParams;
using engelset::Json;
using engelset::QuadRadius;
using engelset::Rational;

// Options shared by the subcommands that need a parameter set.
struct ConfigOpts {
    std::string params_file;
    std::string preset;

    void attach(CLI::App* cmd) {
        auto* file = cmd->add_option("--params", params_file, "parameter file (JSON)");
        cmd->add_option("--preset", preset, "built-in parameter set")
            ->check(CLI::IsMember({"planar", "spatial", "d4"}))
            ->excludes(file);
    }

    EngelParams load() const {
        if (!preset.empty()) {
            if (preset == "planar") return engelset::planar_example();
            if (preset == "spatial") return engelset::spatial_example();
            return engelset::d4_example();
        }
        if (params_file.empty()) {
            throw engelset::ValidationError("one of --params or --preset is required");
        }
        std::ifstream in(params_file);
        if (!in) {
            throw engelset::ValidationError("cannot open parameter file: " + params_file);
        }
        std::ostringstream text;
        text << in.rdbuf();
        return engelset::params_from_json_text(text.str());
    }
};

// Radius options: --rho takes an exact decimal/rational radius or the
// symbolic form 2dR-eps (requiring --eps); --rho-sq takes the squared
// radius directly. Exactly one of the two must be given.
struct RadiusOpts {
    std::string rho;
    std::string rho_sq;
    std::string eps;

    void attach(CLI::App* cmd) {
        auto* r = cmd->add_option("--rho", rho, "cluster radius (exact decimal, p/q, or 2dR-eps)");
        cmd->add_option("--rho-sq", rho_sq, "squared cluster radius (exact decimal or p/q)")
            ->excludes(r);
        cmd->add_option("--eps", eps, "epsilon for the symbolic radius 2dR-eps");
    }

    QuadRadius resolve(const EngelParams& params) const {
        if (rho.empty() && rho_sq.empty()) {
            throw engelset::ValidationError("one of --rho or --rho-sq is required");
        }
        if (!rho_sq.empty()) {
            const Rational sq = Rational::parse(rho_sq);
            if (sq.sign() <= 0) {
                throw engelset::ValidationError("--rho-sq must be positive");
            }
            return QuadRadius(sq);
        }
        if (rho == "2dR-eps") {
            if (eps.empty()) {
                throw engelset::ValidationError("the symbolic radius 2dR-eps requires --eps");
            }
            return engelset::two_dR_minus_eps(params.d(), params.R_sq(), Rational::parse(eps))
                .squared();
        }
        const Rational r = Rational::parse(rho);
        if (r.sign() <= 0) {
            throw engelset::ValidationError("--rho must be positive");
        }
        return QuadRadius(r * r);
    }
};

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw engelset::ValidationError("cannot open output file: " + out_path);
    }
    out << content;
}

void emit_json(const std::string& out_path, const Json& j) {
    write_output(out_path, j.dump(2) + "\n");
}

std::uint64_t effective_cap(std::uint64_t flag_value) {
    return flag_value > 0 ? flag_value : engelset::default_point_cap();
}

int run_generate(const ConfigOpts& config, std::int64_t m_min, std::int64_t m_max, std::int64_t L,
                 std::uint64_t cap, const std::string& out_path) {
    const EngelParams params = config.load();
    if (m_min > m_max) {
        std::ostringstream header;
        header << "layer";
        for (int i = 1; i < params.d(); ++i) header << ",horiz_" << i;
        header << ",vlevel\n";
        write_output(out_path, header.str());
        return 0;
    }
    const auto window =
        engelset::LayerWindow::generate(params, m_min, m_max, L, effective_cap(cap));
    write_output(out_path, engelset::window_to_csv(window));
    return 0;
}

int run_count(const ConfigOpts& config, const RadiusOpts& radius, std::uint64_t cap,
              const std::string& out_path) {
    const EngelParams params = config.load();
    const QuadRadius rho_sq = radius.resolve(params);
    const auto report = engelset::count_classes(params, rho_sq, effective_cap(cap));
    emit_json(out_path, engelset::class_report_to_json(report));
    std::cerr << "classes at squared radius " << rho_sq.str() << ": " << report.n_classes
              << " over " << report.reps.size() << " representatives\n";
    return 0;
}

int run_group(const ConfigOpts& config, const RadiusOpts& radius, int k, std::int64_t layer,
              std::uint64_t cap, const std::string& out_path) {
    const EngelParams params = config.load();
    QuadRadius rho_sq;
    Json prediction(nullptr);
    std::optional<std::uint64_t> predicted_order;
    if (k > 0) {
        if (!radius.rho.empty() || !radius.rho_sq.empty()) {
            throw engelset::ValidationError("give either --k or a radius option, not both");
        }
        const auto pred = engelset::predict_group(params, k, layer);
        rho_sq = pred.radius.squared();
        prediction = engelset::group_prediction_to_json(pred);
        if (pred.applicable) predicted_order = pred.predicted_order;
    } else {
        rho_sq = radius.resolve(params);
    }

    const auto spec = engelset::required_window(params, layer, rho_sq);
    const auto window = engelset::generate_window(params, spec, effective_cap(cap));
    const auto cluster =
        engelset::extract_cluster(window, engelset::layer_origin(params, layer), rho_sq);
    const auto group = engelset::cluster_group(cluster);

    Json j;
    j["layer"] = layer;
    j["rho_sq"] = engelset::quad_to_json(rho_sq);
    j["cluster_size"] = cluster.size();
    j["group"] = engelset::cluster_group_to_json(group);
    j["prediction"] = prediction;
    j["matches_prediction"] =
        predicted_order ? Json(group.spanning && group.order() == *predicted_order) : Json(nullptr);
    emit_json(out_path, j);
    std::cerr << "symmetry group order at layer " << layer << ": " << group.order() << "\n";
    return 0;
}

int run_regularity(const ConfigOpts& config, const std::string& eps, bool skip_enreg,
                   std::uint64_t cap, const std::string& out_path) {
    const EngelParams params = config.load();
    Json j;
    j["verdict"] = engelset::regularity_verdict_to_json(engelset::is_regular(params.seq()));
    j["kappa"] = engelset::kappa_invariant(params.seq());
    j["hypothesis"] = eps.empty()
                          ? Json(nullptr)
                          : engelset::hypothesis_report_to_json(
                                engelset::onecluster_hypothesis(params, Rational::parse(eps)));
    j["enreg"] = skip_enreg ? Json(nullptr)
                            : engelset::enreg_report_to_json(
                                  engelset::enreg_check(params, effective_cap(cap)));
    j["two_regular"] =
        engelset::two_regular_report_to_json(engelset::two_regular_distinct(params));
    emit_json(out_path, j);
    return 0;
}

int run_choose_params(int d, const std::string& R, const std::string& R_sq_text,
                      const std::string& eps, const std::string& out_path) {
    if (R.empty() == R_sq_text.empty()) {
        throw engelset::ValidationError("exactly one of --R and --R-sq is required");
    }
    Rational R_sq;
    if (!R.empty()) {
        const Rational r = Rational::parse(R);
        R_sq = r * r;
    } else {
        R_sq = Rational::parse(R_sq_text);
    }
    const EngelParams params = engelset::choose_parameters(d, R_sq, Rational::parse(eps));
    Json j;
    j["params"] = engelset::params_to_json(params);
    j["verdict"] = engelset::regularity_verdict_to_json(engelset::is_regular(params.seq()));
    j["hypothesis"] = engelset::hypothesis_report_to_json(
        engelset::onecluster_hypothesis(params, Rational::parse(eps)));
    emit_json(out_path, j);
    return 0;
}

int run_verify_delone(const ConfigOpts& config, std::int64_t m_min, std::int64_t m_max,
                      std::int64_t L, std::uint64_t samples, std::uint64_t seed,
                      std::uint64_t cap, const std::string& out_path) {
    const EngelParams params = config.load();
    const auto window =
        engelset::LayerWindow::generate(params, m_min, m_max, L, effective_cap(cap));
    const auto radii = engelset::delone_radii(params);
    const auto packing = engelset::verify_packing(window, radii.r * radii.r);
    const auto covering = engelset::verify_covering(window, radii.R_sq, samples, seed);
    Json j;
    j["r"] = radii.r.str();
    j["R_sq"] = radii.R_sq.str();
    j["packing"] = engelset::packing_report_to_json(packing);
    j["covering"] = engelset::covering_report_to_json(covering);
    j["ok"] = packing.ok && covering.ok && covering.sharp_ok;
    emit_json(out_path, j);
    return 0;
}

int run_onedim(const std::string& mode, const std::string& a, const std::string& b,
               const std::string& rho, const std::string& R, int n,
               const std::vector<std::string>& checks, const std::string& out_path) {
    engelset::LineSet set;
    if (mode == "ab") {
        if (a.empty() || b.empty()) {
            throw engelset::ValidationError("ab mode requires --a and --b");
        }
        set = engelset::make_ab_set(Rational::parse(a), Rational::parse(b), n);
    } else {
        if (rho.empty() || R.empty()) {
            throw engelset::ValidationError("counterexample mode requires --rho and --R");
        }
        set = engelset::make_1d_counterexample(Rational::parse(rho), Rational::parse(R), n);
    }
    Json j;
    j["points"] = engelset::lineset_to_json(set);
    Json results = Json::array();
    for (const std::string& text : checks) {
        Json c;
        c["rho"] = text;
        c["equal"] = engelset::line_clusters_equal(set, Rational::parse(text));
        results.push_back(std::move(c));
    }
    j["checks"] = std::move(results);
    emit_json(out_path, j);
    return 0;
}

int run_svg(const ConfigOpts& config, std::int64_t m_min, std::int64_t m_max, std::int64_t L,
            const std::vector<std::string>& rhos, std::uint64_t cap, const std::string& out_path) {
    const EngelParams params = config.load();
    const auto window =
        engelset::LayerWindow::generate(params, m_min, m_max, L, effective_cap(cap));
    std::vector<QuadRadius> radii;
    for (const std::string& text : rhos) {
        radii.push_back(QuadRadius(Rational::parse(text)));
    }
    write_output(out_path, engelset::window_svg(window, radii));
    return 0;
}

int run_reproduce_table(const std::string& which, const std::string& out_path) {
    if (which.empty()) {
        throw engelset::ValidationError("reproduce-table needs a table name (positional or --preset)");
    }
    const EngelParams params =
        which == "planar" ? engelset::planar_example() : engelset::spatial_example();
    write_output(out_path, engelset::layer_table_csv(params, -6, 6));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Layered Delone set construction, cluster counting and regularity checks"};
    app.require_subcommand(1);

    ConfigOpts config;
    RadiusOpts radius;
    std::string out_path;
    std::int64_t m_min = -6, m_max = 6, L = 6;
    std::uint64_t cap = 0;
    int k = 0;
    std::int64_t layer = 0;
    std::string eps_text;
    bool skip_enreg = false;
    int d = 0;
    std::string R_text, R_sq_text;
    std::uint64_t samples = 10000, seed = 1;
    std::string mode = "ab", a_text, b_text, rho_text, big_r_text;
    int n = 1;
    std::vector<std::string> check_rhos, svg_rhos;
    std::string table_name;

    auto add_window_opts = [&](CLI::App* cmd) {
        cmd->add_option("--m-min", m_min, "lowest layer index");
        cmd->add_option("--m-max", m_max, "highest layer index");
        cmd->add_option("-L,--half-width", L, "lattice box half-width per layer");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file ('-' for stdout)");
        cmd->add_option("--max-points", cap, "window point cap (0 = default / env)");
    };

    CLI::App* generate = app.add_subcommand("generate", "dump a window of the set as CSV");
    config.attach(generate);
    add_window_opts(generate);
    add_common(generate);

    CLI::App* count = app.add_subcommand("count", "count cluster classes at a radius");
    config.attach(count);
    radius.attach(count);
    add_common(count);

    CLI::App* group = app.add_subcommand("group", "cluster symmetry group at a layer");
    config.attach(group);
    radius.attach(group);
    group->add_option("--k", k, "use the radius 2kR and compare with the predicted group")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    group->add_option("--layer", layer, "layer index of the cluster center");
    add_common(group);

    CLI::App* regularity = app.add_subcommand("regularity", "regularity verdicts and reports");
    config.attach(regularity);
    regularity->add_option("--eps", eps_text, "epsilon for the single-class hypothesis report");
    regularity->add_flag("--skip-enreg", skip_enreg, "skip the cluster-count consistency check");
    add_common(regularity);

    CLI::App* choose = app.add_subcommand("choose-params", "synthesize parameters for a target R");
    choose->add_option("--d", d, "dimension")->required();
    choose->add_option("--R", R_text, "target covering radius (exact decimal or p/q)");
    choose->add_option("--R-sq", R_sq_text, "squared covering radius");
    choose->add_option("--eps", eps_text, "margin below 2dR")->required();
    choose->add_option("--out", out_path, "output file ('-' for stdout)");

    CLI::App* verify = app.add_subcommand("verify-delone", "packing and covering verification");
    config.attach(verify);
    std::int64_t v_m_min = -3, v_m_max = 3, v_L = 8;
    verify->add_option("--m-min", v_m_min, "lowest layer index");
    verify->add_option("--m-max", v_m_max, "highest layer index");
    verify->add_option("-L,--half-width", v_L, "lattice box half-width per layer");
    verify->add_option("--samples", samples, "number of covering samples");
    verify->add_option("--seed", seed, "sample seed");
    add_common(verify);

    CLI::App* onedim = app.add_subcommand("onedim", "line sets and their cluster checks");
    onedim->add_option("--mode", mode, "ab | counterexample")
        ->check(CLI::IsMember({"ab", "counterexample"}));
    onedim->add_option("--a", a_text, "short gap (ab mode)");
    onedim->add_option("--b", b_text, "long gap (ab mode)");
    onedim->add_option("--rho", rho_text, "forced gap (counterexample mode)");
    onedim->add_option("--R", big_r_text, "covering radius (counterexample mode)");
    onedim->add_option("-n", n, "size parameter");
    onedim->add_option("--check", check_rhos, "radius to test cluster equality at (repeatable)");
    onedim->add_option("--out", out_path, "output file ('-' for stdout)");

    CLI::App* svg = app.add_subcommand("svg", "scatter figure with highlighted radii");
    config.attach(svg);
    add_window_opts(svg);
    svg->add_option("--rho", svg_rhos, "circle radius to highlight (repeatable)");
    add_common(svg);

    CLI::App* table = app.add_subcommand("reproduce-table", "layer coset table of an example");
    auto* table_pos = table->add_option("name", table_name, "planar | spatial")
                          ->check(CLI::IsMember({"planar", "spatial"}));
    table->add_option("--preset", table_name, "planar | spatial")
        ->check(CLI::IsMember({"planar", "spatial"}))
        ->excludes(table_pos);
    table->add_option("--out", out_path, "output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) return run_generate(config, m_min, m_max, L, cap, out_path);
        if (count->parsed()) return run_count(config, radius, cap, out_path);
        if (group->parsed()) return run_group(config, radius, k, layer, cap, out_path);
        if (regularity->parsed())
            return run_regularity(config, eps_text, skip_enreg, cap, out_path);
        if (choose->parsed())
            return run_choose_params(d, R_text, R_sq_text, eps_text, out_path);
        if (verify->parsed())
            return run_verify_delone(config, v_m_min, v_m_max, v_L, samples, seed, cap, out_path);
        if (onedim->parsed())
            return run_onedim(mode, a_text, b_text, rho_text, big_r_text, n, check_rhos, out_path);
        if (svg->parsed()) return run_svg(config, m_min, m_max, L, svg_rhos, cap, out_path);
        if (table->parsed()) return run_reproduce_table(table_name, out_path);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const engelset::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const engelset::InsufficientWindowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const engelset::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
