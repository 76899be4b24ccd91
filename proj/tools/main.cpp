// solvspec command-line driver: continuum-dielectric spectral densities,
// two-level decoherence observables, and solvation-data fits.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cli_commands.hpp"
#include "cli_config.hpp"

namespace {

constexpr const char* kUsage =
    "usage: solvspec <command> [--config PATH] [--out PATH] [--tol REAL] [--seed INT]\n"
    "                [--<config-key> VALUE ...]\n"
    "\n"
    "commands:\n"
    "  spectral    J(omega) table for a continuum model or three-component environment\n"
    "  lorentzian  (component, alpha, tau, E_R, peak) decomposition table\n"
    "  dynamics    theta, Gamma, |rho12|, nu(t), C(t) along a time grid\n"
    "  fit         multi-exponential fit of a correlation data file\n"
    "  crossover   analytic and numeric component-crossover frequencies\n"
    "  datasets    bundled solvation / coupling / timescale reference tables\n"
    "\n"
    "Config values come from the optional key = value file, overridden by\n"
    "--key value pairs.  Unknown keys are errors.  Exit codes: 0 success,\n"
    "2 config error, 3 numeric failure, 4 fit non-convergence.\n";

} // namespace

int main(int argc, char** argv) {
    using namespace solvspec;

    if (argc < 2) {
        std::cerr << kUsage;
        return 2;
    }
    const std::string command = argv[1];
    if (command == "-h" || command == "--help" || command == "help") {
        std::cout << kUsage;
        return 0;
    }

    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    std::vector<std::pair<std::string, std::string>> overrides;

    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--", 0) != 0) {
            std::cerr << "error: expected --key value pairs, got '" << arg << "'\n";
            return 2;
        }
        if (i + 1 >= argc) {
            std::cerr << "error: flag '" << arg << "' is missing a value\n";
            return 2;
        }
        const std::string key = arg.substr(2);
        const std::string value = argv[++i];
        if (key == "config") {
            config_path = value;
        } else if (key == "out") {
            out_path = value;
        } else {
            overrides.emplace_back(key, value);
        }
    }

    try {
        const auto cfg = cli::RunConfig::from_file_and_overrides(config_path, overrides);
        if (out_path) {
            std::ofstream out(*out_path);
            if (!out) {
                std::cerr << "error: cannot open output file " << *out_path << "\n";
                return 2;
            }
            return cli::run_command(command, cfg, out);
        }
        return cli::run_command(command, cfg, std::cout);
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
