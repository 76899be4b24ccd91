#include "cli_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace solvspec::cli {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "model",
        "a_angstrom", "b_angstrom", "c_angstrom", "delta_mu_debye",
        "eps_cavity", "protein_eps",
        "solvent_eps_static", "solvent_eps_inf", "solvent_tau_d_ps",
        "protein_eps_static", "protein_eps_inf", "protein_tau_d_ps",
        "bound_eps_static", "bound_eps_inf", "bound_tau_d_ps",
        "temperature_K", "epsilon_cm1", "delta_cm1",
        "omega_min_rad_ps", "omega_max_rad_ps", "omega_points", "omega_scale",
        "t_min_ps", "t_max_ps", "t_points", "t_scale",
        "stokes_convention",
        "data_file", "fit_components", "fit_er_cm1",
        "dataset_table", "dataset_filter",
        "tol", "seed",
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> make_grid(double lo, double hi, int n, bool log_spaced) {
    if (!(n >= 2)) throw ConfigError("grids need at least 2 points");
    if (!(hi > lo)) throw ConfigError("grid maximum must exceed grid minimum");
    if (log_spaced && !(lo > 0.0)) {
        throw ConfigError("log-spaced grids require a positive minimum");
    }
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        const double s = double(i) / double(n - 1);
        g[i] = log_spaced ? lo * std::pow(hi / lo, s) : lo + s * (hi - lo);
    }
    return g;
}

} // namespace

RunConfig RunConfig::from_file_and_overrides(
    const std::optional<std::string>& path,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
    RunConfig cfg;
    if (path) {
        std::ifstream in(*path);
        if (!in) throw ConfigError("cannot open config file: " + *path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (trim(line).empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw ConfigError(*path + ":" + std::to_string(lineno) +
                                  ": expected 'key = value'");
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty() || value.empty()) {
                throw ConfigError(*path + ":" + std::to_string(lineno) +
                                  ": empty key or value");
            }
            cfg.values_[key] = value;
        }
    }
    for (const auto& [k, v] : overrides) cfg.values_[k] = v;
    cfg.check_known_keys();
    return cfg;
}

void RunConfig::check_known_keys() const {
    for (const auto& [k, _] : values_) {
        if (!known_keys().count(k)) {
            throw ConfigError("unknown config key '" + k + "'");
        }
    }
}

bool RunConfig::has(const std::string& key) const { return values_.count(key) > 0; }

std::string RunConfig::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double RunConfig::get_number(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse number from '" + it->second +
                          "'");
    }
}

double RunConfig::require_number(const std::string& key) const {
    if (!has(key)) throw ConfigError("missing required config key '" + key + "'");
    return get_number(key, 0.0);
}

int RunConfig::get_int(const std::string& key, int fallback) const {
    const double v = get_number(key, fallback);
    const int i = static_cast<int>(std::lround(v));
    if (std::abs(v - i) > 1e-9) throw ConfigError("config key '" + key + "' must be an integer");
    return i;
}

std::uint64_t RunConfig::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [k, v] : values_) {
        mix(k);
        mix("=");
        mix(v);
        mix("\n");
    }
    return h;
}

std::uint64_t RunConfig::seed() const {
    const double v = get_number("seed", 0.0);
    return static_cast<std::uint64_t>(v);
}

DebyeDielectric RunConfig::solvent() const {
    DebyeDielectric d{get_number("solvent_eps_static", 78.3), get_number("solvent_eps_inf", 4.21),
                      get_number("solvent_tau_d_ps", 8.2)};
    d.validate();
    return d;
}

DebyeDielectric RunConfig::protein_debye() const {
    DebyeDielectric d{get_number("protein_eps_static", 15.0), get_number("protein_eps_inf", 2.0),
                      get_number("protein_tau_d_ps", 1e4)};
    d.validate();
    return d;
}

// Bound-water defaults: no consensus dielectric data exists for the first
// hydration shell, so a static constant midway between protein and bulk
// water, the bulk high-frequency value, and a relaxation time in the middle
// of the reported 5-50 ps window are used unless overridden.
DebyeDielectric RunConfig::bound_water() const {
    DebyeDielectric d{get_number("bound_eps_static", 40.0), get_number("bound_eps_inf", 4.21),
                      get_number("bound_tau_d_ps", 40.0)};
    d.validate();
    return d;
}

StaticDielectric RunConfig::protein_static() const {
    StaticDielectric d{get_number("protein_eps", 2.0)};
    d.validate();
    return d;
}

StaticDielectric RunConfig::cavity() const {
    StaticDielectric d{get_number("eps_cavity", 1.0)};
    d.validate();
    return d;
}

ThreeComponentEnvironment RunConfig::three_component() const {
    ThreeComponentEnvironment env;
    env.protein = protein_debye();
    env.bound = bound_water();
    env.solvent = solvent();
    env.cavity_radius_a = get_number("a_angstrom", 3.0);
    env.protein_radius_b = get_number("b_angstrom", 10.0);
    env.shell_radius_c = get_number("c_angstrom", 14.5);
    env.delta_mu_debye = get_number("delta_mu_debye", 1.0);
    try {
        env.validate();
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return env;
}

bool RunConfig::is_three_component() const {
    return get_string("model", "three_component") == "three_component";
}

EnvironmentModel RunConfig::environment_model() const {
    const std::string model = get_string("model", "three_component");
    const double a = get_number("a_angstrom", 3.0);
    const double b = get_number("b_angstrom", 10.0);
    const double c = get_number("c_angstrom", 14.5);
    const double mu = get_number("delta_mu_debye", 1.0);

    EnvironmentModel m;
    m.delta_mu_debye = mu;
    if (model == "model1") {
        m.medium = Model1{a, cavity(), solvent()};
    } else if (model == "model2") {
        m.medium = Model2{a, cavity(), protein_debye()};
    } else if (model == "model3") {
        m.medium = Model3{b, protein_static(), solvent()};
    } else if (model == "model4") {
        m.medium = Model4{a, b, protein_debye(), solvent()};
    } else if (model == "model5") {
        m.medium = Model5{b, c, protein_static(), bound_water(), solvent()};
    } else {
        throw ConfigError("config key 'model' must be one of model1..model5 or "
                          "three_component, got '" + model + "'");
    }
    try {
        m.validate();
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return m;
}

// Debye times of the media participating in the selected model.
std::vector<double> RunConfig::relevant_taus() const {
    const std::string model = get_string("model", "three_component");
    if (model == "model1" || model == "model3") return {solvent().tau_debye_ps};
    if (model == "model2") return {protein_debye().tau_debye_ps};
    if (model == "model4") return {protein_debye().tau_debye_ps, solvent().tau_debye_ps};
    if (model == "model5") return {bound_water().tau_debye_ps, solvent().tau_debye_ps};
    if (model == "three_component") {
        return {protein_debye().tau_debye_ps, bound_water().tau_debye_ps,
                solvent().tau_debye_ps};
    }
    throw ConfigError("config key 'model' must be one of model1..model5 or "
                      "three_component, got '" + model + "'");
}

RunConfig::Grid RunConfig::omega_grid() const {
    const std::string scale = get_string("omega_scale", "log");
    if (scale != "log" && scale != "linear") {
        throw ConfigError("omega_scale must be 'log' or 'linear'");
    }
    const bool log_spaced = scale == "log";
    double lo, hi;
    if (has("omega_min_rad_ps") || has("omega_max_rad_ps")) {
        lo = require_number("omega_min_rad_ps");
        hi = require_number("omega_max_rad_ps");
    } else {
        // Span every relaxation peak of the participating media with margin.
        const auto taus = relevant_taus();
        const double tau_slow = *std::max_element(taus.begin(), taus.end());
        const double tau_fast = *std::min_element(taus.begin(), taus.end());
        lo = 1e-4 / tau_slow;
        hi = 1e3 / tau_fast;
    }
    return {make_grid(lo, hi, get_int("omega_points", 400), log_spaced), log_spaced};
}

RunConfig::Grid RunConfig::time_grid() const {
    const std::string scale = get_string("t_scale", "log");
    if (scale != "log" && scale != "linear") {
        throw ConfigError("t_scale must be 'log' or 'linear'");
    }
    const bool log_spaced = scale == "log";
    double lo, hi;
    if (has("t_min_ps") || has("t_max_ps")) {
        lo = require_number("t_min_ps");
        hi = require_number("t_max_ps");
    } else {
        const auto taus = relevant_taus();
        lo = 1e-3;
        hi = 10.0 * *std::max_element(taus.begin(), taus.end());
    }
    return {make_grid(lo, hi, get_int("t_points", 200), log_spaced), log_spaced};
}

} // namespace solvspec::cli
