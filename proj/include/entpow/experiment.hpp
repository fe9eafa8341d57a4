#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "entpow/floquet_model.hpp"

namespace entpow {

void to_json(nlohmann::json& j, const FieldConfig& cfg);
// Honors "preset": when present and nonempty it overrides the field arrays.
void from_json(const nlohmann::json& j, FieldConfig& cfg);

enum class ExperimentKind {
    entanglement_series,
    entangling_power,
    rmt_compare,
    oracle_check,
    spectral,
    symmetry_check,
};

std::string to_string(ExperimentKind k);
ExperimentKind experiment_from_string(const std::string& s);

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::entanglement_series;
    FieldConfig field_config;
    int n_max = 40;
    long samples = 2000;
    int realizations = 50;
    std::uint64_t seed = 1;
    std::string output_dir = ".";
};

void to_json(nlohmann::json& j, const ExperimentConfig& cfg);
void from_json(const nlohmann::json& j, ExperimentConfig& cfg);

// "pi/4", "2pi/3", "3*pi/8", "pi", or a plain decimal.
double parse_tau(const std::string& text);

// FNV-1a of the canonical (sorted-key) JSON dump, as 16 hex digits. The
// output_dir is excluded so relocated runs hash identically.
std::string config_hash(const ExperimentConfig& cfg);

// Runs one experiment, writing CSVs plus report.json under output_dir.
// Returns 0 on success (including passing inline checks), 1 on a failed
// check; throws on invalid configuration. Identical (config, seed) pairs
// reproduce byte-identical CSVs.
int run_experiment(const ExperimentConfig& cfg);

}  // namespace entpow
