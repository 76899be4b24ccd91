// cli_config.hpp — flat key = value run configuration with command-line
// overrides, strict key validation, and typed accessors.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solvspec/dielectric.hpp"
#include "solvspec/spectral.hpp"

namespace solvspec::cli {

// Raised for any configuration problem; the driver maps it to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

class RunConfig {
public:
    // Parses `key = value` lines ('#' comments) and applies overrides on top.
    static RunConfig from_file_and_overrides(
        const std::optional<std::string>& path,
        const std::vector<std::pair<std::string, std::string>>& overrides);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_number(const std::string& key, double fallback) const;
    double require_number(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;

    // FNV-1a hash of the canonicalised key=value list, for provenance output.
    std::uint64_t hash() const;

    // Assembled model inputs (defaults follow the bundled media parameters).
    DebyeDielectric solvent() const;
    DebyeDielectric protein_debye() const;
    DebyeDielectric bound_water() const;
    StaticDielectric protein_static() const;
    StaticDielectric cavity() const;
    ThreeComponentEnvironment three_component() const;

    // Selected by the `model` key: model1..model5 or three_component.
    EnvironmentModel environment_model() const;
    bool is_three_component() const;

    struct Grid {
        std::vector<double> values;
        bool log_spaced = true;
    };
    // Debye relaxation times of the media the selected model uses.
    std::vector<double> relevant_taus() const;
    // Frequency grid; defaults to 400 log points on
    // [1e-4/tau_slowest, 1e3/tau_fastest] of the configured media.
    Grid omega_grid() const;
    // Time grid; defaults to 200 log points on [1e-3, 10] * slowest tau.
    Grid time_grid() const;

    double temperature() const { return get_number("temperature_K", 300.0); }
    double quad_tol() const { return get_number("tol", 1e-7); }
    std::uint64_t seed() const;

private:
    std::map<std::string, std::string> values_;

    void check_known_keys() const;
};

} // namespace solvspec::cli
