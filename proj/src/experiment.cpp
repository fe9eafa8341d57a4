#include "entpow/experiment.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <stdexcept>

#include "entpow/entangling_power.hpp"
#include "entpow/integrable_oracle.hpp"
#include "entpow/op_entanglement.hpp"
#include "entpow/rmt_model.hpp"
#include "entpow/spectral_stats.hpp"
#include "entpow/util.hpp"

namespace entpow {

namespace fs = std::filesystem;
using nlohmann::json;

void to_json(json& j, const FieldConfig& cfg) {
    j = json{{"L", cfg.L},       {"tau", cfg.tau}, {"hx", cfg.hx},
             {"hy", cfg.hy},     {"hz", cfg.hz},   {"boundary", to_string(cfg.boundary)}};
    if (!cfg.preset.empty()) j["preset"] = cfg.preset;
}

void from_json(const json& j, FieldConfig& cfg) {
    const int L = j.at("L").get<int>();
    const double tau = j.at("tau").get<double>();
    const Boundary boundary =
        boundary_from_string(j.value("boundary", std::string("open")));
    if (j.contains("preset") && !j.at("preset").get<std::string>().empty()) {
        cfg = preset_config(j.at("preset").get<std::string>(), L, tau, boundary);
        return;
    }
    cfg.L = L;
    cfg.tau = tau;
    cfg.boundary = boundary;
    cfg.preset.clear();
    j.at("hx").get_to(cfg.hx);
    j.at("hy").get_to(cfg.hy);
    j.at("hz").get_to(cfg.hz);
    validate(cfg);
}

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::entanglement_series: return "entanglement-series";
        case ExperimentKind::entangling_power: return "entangling-power";
        case ExperimentKind::rmt_compare: return "rmt-compare";
        case ExperimentKind::oracle_check: return "oracle-check";
        case ExperimentKind::spectral: return "spectral";
        case ExperimentKind::symmetry_check: return "symmetry-check";
    }
    throw std::logic_error("to_string: bad ExperimentKind");
}

ExperimentKind experiment_from_string(const std::string& s) {
    for (ExperimentKind k : {ExperimentKind::entanglement_series, ExperimentKind::entangling_power,
                             ExperimentKind::rmt_compare, ExperimentKind::oracle_check,
                             ExperimentKind::spectral, ExperimentKind::symmetry_check})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown experiment '" + s + "'");
}

void to_json(json& j, const ExperimentConfig& cfg) {
    j = json{{"experiment", to_string(cfg.experiment)},
             {"field_config", cfg.field_config},
             {"n_max", cfg.n_max},
             {"samples", cfg.samples},
             {"realizations", cfg.realizations},
             {"seed", cfg.seed},
             {"output_dir", cfg.output_dir}};
}

void from_json(const json& j, ExperimentConfig& cfg) {
    cfg.experiment = experiment_from_string(j.at("experiment").get<std::string>());
    j.at("field_config").get_to(cfg.field_config);
    cfg.n_max = j.value("n_max", 40);
    cfg.samples = j.value("samples", 2000L);
    cfg.realizations = j.value("realizations", 50);
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.output_dir = j.value("output_dir", std::string("."));
}

double parse_tau(const std::string& text) {
    static const std::regex pi_form(R"(^\s*([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)",
                                    std::regex::icase);
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        const double num = m[1].str().empty() ? 1.0 : std::stod(m[1].str());
        const double den = m[2].str().empty() ? 1.0 : std::stod(m[2].str());
        if (den == 0.0) throw std::invalid_argument("parse_tau: division by zero");
        return num * std::numbers::pi / den;
    }
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_tau: cannot parse '" + text + "'");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size())
        throw std::invalid_argument("parse_tau: cannot parse '" + text + "'");
    return v;
}

std::string config_hash(const ExperimentConfig& cfg) {
    json j = cfg;
    j.erase("output_dir");
    const std::string dump = j.dump();  // nlohmann sorts object keys
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

std::string provenance_line(const ExperimentConfig& cfg) {
    return "config_hash=" + config_hash(cfg) + " seed=" + std::to_string(cfg.seed) +
           " entpow=" ENTPOW_VERSION;
}

// One column of already-formatted values under a one-word header.
std::string column_csv(const std::string& header, const std::vector<double>& values,
                       const std::string& comment) {
    std::string out = "# " + comment + "\n" + header + "\n";
    for (double v : values) out += g17(v) + "\n";
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

int finish(const ExperimentConfig& cfg, json report, const Timer& timer, bool pass) {
    report["experiment"] = to_string(cfg.experiment);
    report["config"] = cfg;
    report["config_hash"] = config_hash(cfg);
    report["seed"] = cfg.seed;
    report["version"] = ENTPOW_VERSION;
    report["wall_time_s"] = timer.seconds();
    report["pass"] = pass;
    write_text(fs::path(cfg.output_dir) / "report.json", report.dump(2) + "\n");
    return pass ? 0 : 1;
}

int run_entanglement_series(const ExperimentConfig& cfg, const Timer& timer) {
    const MeasureSeries series = measure_series(cfg.field_config, cfg.n_max);
    write_text(fs::path(cfg.output_dir) / "series.csv", series_csv(series, {provenance_line(cfg)}));
    json report;
    report["outputs"] = {"series.csv"};
    return finish(cfg, report, timer, true);
}

int run_entangling_power(const ExperimentConfig& cfg, const Timer& timer) {
    const MeasureSeries series = ep_series(cfg.field_config, cfg.n_max, cfg.samples, cfg.seed);
    write_text(fs::path(cfg.output_dir) / "series.csv", series_csv(series, {provenance_line(cfg)}));
    json report;
    report["outputs"] = {"series.csv"};
    report["samples"] = cfg.samples;
    return finish(cfg, report, timer, true);
}

int run_rmt_compare(const ExperimentConfig& cfg, const Timer& timer) {
    const int L = cfg.field_config.L;
    const double tau = cfg.field_config.tau;
    const RmtSeries series =
        rmt_trajectory(tau, L, cfg.n_max, cfg.realizations, cfg.seed);
    const Eigen::Index N = half_cut(L).dim_A;
    std::string csv = "# " + provenance_line(cfg) + "\n";
    csv += "n,E_l,E_vN,E_l_US,ep_l,ep_vN,ep_vN_stderr,"
           "sem_E_l,sem_E_vN,sem_E_l_US,sem_ep_l,pred_E_l,pred_ep_l\n";
    for (const RmtRecord& r : series) {
        const RmtPrediction p = rmt_predictions(tau, N, r.n);
        csv += std::to_string(r.n) + "," + g17(r.E_l) + "," + g17(r.E_vN) + "," +
               g17(r.E_l_US) + "," + g17(r.ep_l) + ",,," + g17(r.sem_E_l) + "," +
               g17(r.sem_E_vN) + "," + g17(r.sem_E_l_US) + "," + g17(r.sem_ep_l) + "," +
               g17(p.el_pred) + "," + g17(p.ep_l_pred) + "\n";
    }
    write_text(fs::path(cfg.output_dir) / "rmt.csv", csv);
    json report;
    report["outputs"] = {"rmt.csv"};
    report["realizations"] = cfg.realizations;
    return finish(cfg, report, timer, true);
}

int run_oracle_check(const ExperimentConfig& cfg, const Timer& timer) {
    const FieldConfig& fc = cfg.field_config;
    const int n_top = 2 * fc.L;
    const MeasureSeries series = measure_series(fc, n_top);
    const Eigen::Index N = half_cut(fc.L).dim_A;
    double max_diff = 0.0;
    std::string csv = "# " + provenance_line(cfg) + "\n";
    csv += "n,E_l,E_vN,E_l_US,ep_l,exact_E_l,exact_E_vN,exact_E_l_US,exact_ep_l\n";
    for (const MeasureRecord& r : series) {
        const ExactMeasures ex = exact_measures(fc.L, r.n);
        const double ep = entangling_power_from_entropies(r.E_l, r.E_l_US, N);
        max_diff = std::max({max_diff, std::abs(r.E_l - ex.E_l), std::abs(r.E_vN - ex.E_vN),
                             std::abs(r.E_l_US - ex.E_l_US), std::abs(ep - ex.ep_l)});
        csv += std::to_string(r.n) + "," + g17(r.E_l) + "," + g17(r.E_vN) + "," +
               g17(r.E_l_US) + "," + g17(ep) + "," + g17(ex.E_l) + "," + g17(ex.E_vN) + "," +
               g17(ex.E_l_US) + "," + g17(ex.ep_l) + "\n";
    }
    write_text(fs::path(cfg.output_dir) / "oracle.csv", csv);
    const bool pass = max_diff < 1e-8;
    std::printf("max |numeric - exact| = %.3e over n = 0..%d (%s)\n", max_diff, n_top,
                pass ? "ok" : "MISMATCH");
    json report;
    report["outputs"] = {"oracle.csv"};
    report["checks"] = {{"max_abs_diff", max_diff}, {"tolerance", 1e-8}};
    return finish(cfg, report, timer, pass);
}

int run_spectral(const ExperimentConfig& cfg, const Timer& timer) {
    const ComplexMatrix U = build_floquet(cfg.field_config);
    const auto [even, odd] = parity_sectors(U, cfg.field_config);
    SpectralReport rep = spacing_statistics(eigenphases_unitary(even));
    rep.sector_label = "even";
    std::vector<double> r_values;
    for (int r = 1; r <= std::min<int>(40, static_cast<int>(rep.phases.size()) / 2); ++r)
        r_values.push_back(r);
    rep.sigma2 = number_variance(rep.phases, r_values);

    const fs::path dir = fs::path(cfg.output_dir) / "spectral";
    fs::create_directories(dir);
    const std::string prov = provenance_line(cfg) + " sector=even";
    write_text(dir / "spacings.csv", column_csv("spacing", rep.spacings, prov));
    write_text(dir / "ratios.csv", column_csv("ratio", rep.ratios, prov));
    std::string s2 = "# " + prov + "\nr,sigma2\n";
    for (const auto& [r, v] : rep.sigma2) s2 += g17(r) + "," + g17(v) + "\n";
    write_text(dir / "sigma2.csv", s2);

    json report;
    report["outputs"] = {"spectral/spacings.csv", "spectral/ratios.csv", "spectral/sigma2.csv"};
    report["sector_dims"] = {even.rows(), odd.rows()};
    report["mean_ratio"] = rep.mean_ratio;
    std::printf("even sector: %lld phases, mean spacing ratio = %.4f\n",
                static_cast<long long>(even.rows()), rep.mean_ratio);
    return finish(cfg, report, timer, true);
}

int run_symmetry_check(const ExperimentConfig& cfg, const Timer& timer) {
    const double residual = check_false_trs(cfg.field_config);
    const double control = check_false_trs(cfg.field_config, true);
    const bool pass = residual < 1e-10;
    std::printf("antiunitary symmetry residual = %.3e (identity-G control %.3e) -> %s\n",
                residual, control, pass ? "ok" : "BROKEN");
    json report;
    report["checks"] = {{"residual", residual},
                        {"identity_control", control},
                        {"tolerance", 1e-10}};
    return finish(cfg, report, timer, pass);
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg) {
    validate(cfg.field_config);
    if (cfg.n_max < 0) throw std::invalid_argument("run_experiment: n_max must be nonnegative");
    fs::create_directories(cfg.output_dir);
    const Timer timer;
    switch (cfg.experiment) {
        case ExperimentKind::entanglement_series: return run_entanglement_series(cfg, timer);
        case ExperimentKind::entangling_power: return run_entangling_power(cfg, timer);
        case ExperimentKind::rmt_compare: return run_rmt_compare(cfg, timer);
        case ExperimentKind::oracle_check: return run_oracle_check(cfg, timer);
        case ExperimentKind::spectral: return run_spectral(cfg, timer);
        case ExperimentKind::symmetry_check: return run_symmetry_check(cfg, timer);
    }
    throw std::logic_error("run_experiment: bad ExperimentKind");
}

}  // namespace entpow
