#include "cli_commands.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

#include "solvspec/datasets.hpp"
#include "solvspec/dynamics.hpp"
#include "solvspec/units.hpp"
#include "solvspec/version.hpp"

namespace solvspec::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void provenance(std::ostream& out, const char* command, const RunConfig& cfg) {
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(cfg.hash()));
    out << "# command: " << command << "\n";
    out << "# config: " << hash << "\n";
    out << "# constants: " << constants_table_version << "\n";
    out << "# solvspec: " << version_string << "\n";
}

quadrature::Options quad_options(const RunConfig& cfg) {
    quadrature::Options opts;
    opts.rel_tol = cfg.quad_tol();
    if (!(opts.rel_tol > 0.0 && opts.rel_tol < 1.0)) {
        throw ConfigError("tol must be in (0, 1)");
    }
    return opts;
}

} // namespace

int cmd_spectral(const RunConfig& cfg, std::ostream& out) {
    provenance(out, "spectral", cfg);
    const auto grid = cfg.omega_grid();

    if (cfg.is_three_component()) {
        const auto env = cfg.three_component();
        const auto decomposition = lorentzian_params(env);
        const auto& terms = decomposition.sum.terms;
        if (decomposition.scale_separation_warning) {
            out << "# note: adjacent relaxation times are separated by less than 10^2; "
                   "the three-peak decomposition may merge\n";
        }
        out << "omega_rad_per_ps,J_rad_per_ps,J_protein,J_bound,J_solvent\n";
        for (double w : grid.values) {
            double total;
            try {
                total = j_three_component(env, w);
            } catch (const NumericError& e) {
                throw NumericError("at omega = " + fmt(w) + ": " + e.what());
            }
            out << fmt(w) << ',' << fmt(total);
            for (const auto& term : terms) {
                const double x = w * term.tau_ps;
                out << ',' << fmt(term.alpha * w / (1.0 + x * x));
            }
            out << '\n';
        }
        return 0;
    }

    const auto model = cfg.environment_model();
    out << "omega_rad_per_ps,J_rad_per_ps\n";
    for (double w : grid.values) {
        double j;
        try {
            j = j_model(model, w);
        } catch (const NumericError& e) {
            throw NumericError("at omega = " + fmt(w) + ": " + e.what());
        }
        out << fmt(w) << ',' << fmt(j) << '\n';
    }
    return 0;
}

int cmd_lorentzian(const RunConfig& cfg, std::ostream& out) {
    const auto env = cfg.three_component();
    const auto decomposition = lorentzian_params(env);
    provenance(out, "lorentzian", cfg);
    if (decomposition.scale_separation_warning) {
        out << "# note: adjacent relaxation times are separated by less than 10^2; "
               "the three-peak decomposition may merge\n";
    }
    out << "component,alpha,tau_ps,E_R_cm1,omega_peak_rad_per_ps\n";
    for (const auto& term : decomposition.sum.terms) {
        const double er = M_PI * term.alpha * units::hbar_cm1_ps / (2.0 * term.tau_ps);
        out << component_name(term.label) << ',' << fmt(term.alpha) << ',' << fmt(term.tau_ps)
            << ',' << fmt(er) << ',' << fmt(1.0 / term.tau_ps) << '\n';
    }
    return 0;
}

int cmd_dynamics(const RunConfig& cfg, std::ostream& out) {
    const auto opts = quad_options(cfg);
    const double temperature = cfg.temperature();
    const double epsilon = cfg.get_number("epsilon_cm1", 0.0);
    const std::string conv = cfg.get_string("stokes_convention", "printed");
    if (conv != "printed" && conv != "relaxing") {
        throw ConfigError("stokes_convention must be 'printed' or 'relaxing'");
    }
    const auto convention = conv == "printed" ? dynamics::StokesConvention::as_printed
                                              : dynamics::StokesConvention::relaxing;

    SpectralDensity j = cfg.is_three_component()
                            ? SpectralDensity::from_lorentzians(
                                  lorentzian_params(cfg.three_component()).sum)
                            : spectral_density(cfg.environment_model());

    dynamics::TwoLevelState state;
    state.amp_ground = state.amp_excited = std::sqrt(0.5);
    state.epsilon_cm1 = epsilon;

    provenance(out, "dynamics", cfg);
    out << "t_ps,theta,gamma,abs_rho12,nu_cm1,C\n";
    for (double t : cfg.time_grid().values) {
        try {
            const double theta = dynamics::phase_shift(j, t, IntegrationRoute::automatic, opts);
            const double gamma = dynamics::decoherence_gamma(j, t, temperature, opts);
            const double abs_rho12 = 0.5 * std::exp(-gamma);
            const double nu = dynamics::stokes_shift_nu_cm1(j, epsilon, t, convention,
                                                            IntegrationRoute::automatic, opts);
            const double c = dynamics::hydration_correlation(j, t,
                                                             IntegrationRoute::automatic, opts);
            out << fmt(t) << ',' << fmt(theta) << ',' << fmt(gamma) << ',' << fmt(abs_rho12)
                << ',' << fmt(nu) << ',' << fmt(c) << '\n';
        } catch (const NumericError& e) {
            throw NumericError("at t = " + fmt(t) + " ps: " + e.what());
        }
    }
    return 0;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.has("data_file")) {
        throw ConfigError("fit requires 'data_file' (correlation samples)");
    }
    const int n = cfg.get_int("fit_components", 2);
    const double er = cfg.require_number("fit_er_cm1");
    if (!(er > 0.0)) throw ConfigError("fit_er_cm1 must be positive");

    fitting::CorrelationSamples data;
    try {
        data = fitting::load_correlation_file(cfg.get_string("data_file", ""));
    } catch (const ParseError& e) {
        throw ConfigError(e.what());
    }

    fitting::FitOptions fopts;
    fopts.seed = cfg.seed();
    fitting::ExponentialFit fit;
    try {
        fit = fitting::fit_multiexponential(data, n, fopts);
    } catch (const ValidationError& e) {
        throw ConfigError(e.what());
    }
    const auto alphas = fitting::couplings_from_fit(er, fit);

    provenance(out, "fit", cfg);
    out << "# residual_rms: " << fmt(fit.residual_rms) << "\n";
    out << "# converged: " << (fit.converged ? "yes" : "no") << "\n";
    if (fit.degenerate_taus) {
        out << "# note: two relaxation times within 1 percent; component count is "
               "effectively degenerate\n";
    }
    out << "# note: couplings use the exact coefficient 2/(pi hbar) = "
        << fmt(2.0 / (M_PI * units::hbar_cm1_ps))
        << " per (cm^-1 ps); the historical shortcut coefficient "
        << fmt(fitting::quick_estimate_coefficient) << " is listed as alpha_quick\n";
    out << "component,weight,tau_ps,alpha,alpha_quick,E_R_cm1\n";
    for (std::size_t i = 0; i < fit.components.size(); ++i) {
        const auto& c = fit.components[i];
        const double quick = fitting::quick_estimate_coefficient * c.weight * er * c.tau_ps;
        out << (i + 1) << ',' << fmt(c.weight) << ',' << fmt(c.tau_ps) << ',' << fmt(alphas[i])
            << ',' << fmt(quick) << ',' << fmt(c.weight * er) << '\n';
    }
    return fit.converged ? 0 : 4;
}

int cmd_crossover(const RunConfig& cfg, std::ostream& out) {
    const auto env = cfg.three_component();
    const auto decomposition = lorentzian_params(env);
    const double temperature = cfg.temperature();
    const double delta = cfg.get_number("delta_cm1", 0.0);

    struct Pair {
        const char* name;
        CrossoverResult (*fn)(const LorentzianSum&);
        ComponentLabel slow, fast;
    };
    const Pair pairs[] = {
        {"protein_solvent", crossover_protein_solvent, ComponentLabel::protein,
         ComponentLabel::solvent},
        {"bound_solvent", crossover_bound_bulk, ComponentLabel::bound_water,
         ComponentLabel::solvent},
    };

    provenance(out, "crossover", cfg);
    out << "pair,omega_co_analytic_rad_per_ps,omega_co_numeric_rad_per_ps,"
           "slow_regime,fast_regime\n";
    for (const auto& p : pairs) {
        const auto result = p.fn(decomposition.sum);
        if (!result.numeric_rad_ps) {
            throw NumericError(std::string(p.name) +
                               ": equal couplings leave no finite crossover to solve for");
        }
        const auto* slow = decomposition.sum.find(p.slow);
        const auto* fast = decomposition.sum.find(p.fast);
        const auto slow_regime =
            classify_regime(slow->alpha, temperature, delta, 1.0 / slow->tau_ps);
        const auto fast_regime =
            classify_regime(fast->alpha, temperature, delta, 1.0 / fast->tau_ps);
        out << p.name << ',' << fmt(result.analytic_rad_ps) << ','
            << fmt(*result.numeric_rad_ps) << ',' << regime_name(slow_regime.regime) << ','
            << regime_name(fast_regime.regime) << '\n';
    }
    return 0;
}

int cmd_datasets(const RunConfig& cfg, std::ostream& out) {
    const std::string table = cfg.get_string("dataset_table", "solvation");
    const std::string filter = cfg.get_string("dataset_filter", "");
    const auto data = fitting::load_reference_datasets();

    auto matches = [&filter](const std::string& a, const std::string& b, const std::string& c) {
        if (filter.empty()) return true;
        return a.find(filter) != std::string::npos || b.find(filter) != std::string::npos ||
               c.find(filter) != std::string::npos;
    };

    provenance(out, "datasets", cfg);
    if (table == "solvation") {
        out << "chromophore,protein,solvent,E_R_cm1,A1,tau1_ps,alpha1,A2,tau2_ps,alpha2,"
               "A3,tau3_ps,alpha3,unresolved_fast_window,source\n";
        for (const auto& r : data.solvation) {
            if (!matches(r.chromophore, r.protein, r.solvent)) continue;
            out << r.chromophore << ',' << r.protein << ',' << r.solvent << ',';
            if (r.reorganization_energy_cm1) out << fmt(*r.reorganization_energy_cm1);
            for (std::size_t j = 0; j < 3; ++j) {
                if (j < r.components.size()) {
                    const auto& c = r.components[j];
                    out << ',' << fmt(c.weight) << ',' << fmt(c.tau_ps) << ',';
                    if (r.reorganization_energy_cm1) {
                        out << fmt(2.0 * (*r.reorganization_energy_cm1) * c.weight * c.tau_ps /
                                   (M_PI * units::hbar_cm1_ps));
                    }
                } else {
                    out << ",,,";
                }
            }
            out << ',' << (r.unresolved_fast_window ? "yes" : "no") << ',' << r.source << '\n';
        }
    } else if (table == "delta") {
        out << "process,delta_min_mev,delta_max_mev,reference\n";
        for (const auto& r : data.delta_scales) {
            if (!matches(r.process, r.reference, "")) continue;
            out << r.process << ',' << fmt(r.delta_min_mev) << ',' << fmt(r.delta_max_mev)
                << ',' << r.reference << '\n';
        }
    } else if (table == "timescales") {
        out << "process,timescale_min_ps,timescale_max_ps,reference\n";
        for (const auto& r : data.timescales) {
            if (!matches(r.process, r.reference, "")) continue;
            out << r.process << ',' << fmt(r.timescale_min_ps) << ','
                << fmt(r.timescale_max_ps) << ',' << r.reference << '\n';
        }
    } else {
        throw ConfigError("dataset_table must be 'solvation', 'delta' or 'timescales'");
    }
    return 0;
}

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out) {
    if (name == "spectral") return cmd_spectral(cfg, out);
    if (name == "lorentzian") return cmd_lorentzian(cfg, out);
    if (name == "dynamics") return cmd_dynamics(cfg, out);
    if (name == "fit") return cmd_fit(cfg, out);
    if (name == "crossover") return cmd_crossover(cfg, out);
    if (name == "datasets") return cmd_datasets(cfg, out);
    throw ConfigError("unknown command '" + name +
                      "'; expected spectral|lorentzian|dynamics|fit|crossover|datasets");
}

} // namespace solvspec::cli
