#include "solvspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "solvspec/quadrature.hpp"
#include "solvspec/units.hpp"

namespace solvspec {

namespace {

void check_radius(double r, const char* name) {
    if (!(r > 0.0)) {
        throw ValidationError(std::string(name) + " must be positive, got " + std::to_string(r));
    }
}

// Upper bound on the effective response rate of a Debye medium embedded in a
// reaction-field ratio; used only as a quadrature hint.
double rate_hint(const DebyeDielectric& d) {
    return (2.0 * d.eps_static + 1.0) / ((2.0 * d.eps_inf + 1.0) * d.tau_debye_ps);
}

} // namespace

void EnvironmentModel::validate() const {
    if (!(delta_mu_debye >= 0.0)) {
        throw ValidationError("delta_mu must be >= 0, got " + std::to_string(delta_mu_debye));
    }
    std::visit(
        [](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Model1>) {
                check_radius(m.cavity_radius_a, "cavity radius a");
                m.eps_cavity.validate();
                m.solvent.validate();
            } else if constexpr (std::is_same_v<M, Model2>) {
                check_radius(m.cavity_radius_a, "cavity radius a");
                m.eps_cavity.validate();
                m.protein.validate();
            } else if constexpr (std::is_same_v<M, Model3>) {
                check_radius(m.protein_radius_b, "protein radius b");
                m.eps_protein.validate();
                m.solvent.validate();
            } else if constexpr (std::is_same_v<M, Model4>) {
                check_radius(m.cavity_radius_a, "cavity radius a");
                if (!(m.protein_radius_b > m.cavity_radius_a)) {
                    throw ValidationError("Model 4 requires a < b");
                }
                m.protein.validate();
                m.solvent.validate();
            } else {
                check_radius(m.protein_radius_b, "protein radius b");
                if (!(m.shell_radius_c > m.protein_radius_b)) {
                    throw ValidationError("Model 5 requires b < c");
                }
                m.eps_protein.validate();
                m.bound_water.validate();
                m.solvent.validate();
            }
        },
        medium);
}

ThreeRegionGeometry three_region_geometry(const EnvironmentModel& m) {
    return std::visit(
        [](const auto& v) -> ThreeRegionGeometry {
            using M = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<M, Model1>) {
                // Shell and bulk are the same solvent; the shell radius drops out.
                return {v.cavity_radius_a, 2.0 * v.cavity_radius_a, v.eps_cavity, v.solvent,
                        v.solvent};
            } else if constexpr (std::is_same_v<M, Model2>) {
                return {v.cavity_radius_a, 2.0 * v.cavity_radius_a, v.eps_cavity, v.protein,
                        v.protein};
            } else if constexpr (std::is_same_v<M, Model3>) {
                return {v.protein_radius_b, 2.0 * v.protein_radius_b, v.eps_protein, v.solvent,
                        v.solvent};
            } else if constexpr (std::is_same_v<M, Model4>) {
                return {v.cavity_radius_a, v.protein_radius_b, StaticDielectric{1.0}, v.protein,
                        v.solvent};
            } else {
                return {v.protein_radius_b, v.shell_radius_c, v.eps_protein, v.bound_water,
                        v.solvent};
            }
        },
        m.medium);
}

double prefactor_radius_angstrom(const EnvironmentModel& m) {
    return three_region_geometry(m).cavity_radius_a;
}

double j_model(const EnvironmentModel& m, double omega_rad_ps) {
    m.validate();
    const DipoleSource src{m.delta_mu_debye};
    return chi_to_j_factor(src) * chi_closed_form(three_region_geometry(m), omega_rad_ps).imag();
}

namespace {

double model_rate_hint(const EnvironmentModel& m) {
    return std::visit(
        [](const auto& v) -> double {
            using M = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<M, Model1>) return rate_hint(v.solvent);
            else if constexpr (std::is_same_v<M, Model2>) return rate_hint(v.protein);
            else if constexpr (std::is_same_v<M, Model3>) return rate_hint(v.solvent);
            else if constexpr (std::is_same_v<M, Model4>)
                return std::max(rate_hint(v.protein), rate_hint(v.solvent));
            else
                return std::max(rate_hint(v.bound_water), rate_hint(v.solvent));
        },
        m.medium);
}

} // namespace

SpectralDensity spectral_density(const EnvironmentModel& m) {
    m.validate();
    const ThreeRegionGeometry g = three_region_geometry(m);
    const double factor = chi_to_j_factor(DipoleSource{m.delta_mu_debye});
    return SpectralDensity::from_function(
        [g, factor](double w) { return factor * chi_closed_form(g, w).imag(); },
        model_rate_hint(m));
}

// ---------------------------------------------------------------------------
// Three-component environment
// ---------------------------------------------------------------------------

void ThreeComponentEnvironment::validate() const {
    protein.validate();
    bound.validate();
    solvent.validate();
    if (!(cavity_radius_a > 0.0 && cavity_radius_a < protein_radius_b &&
          protein_radius_b < shell_radius_c)) {
        throw ValidationError("three-component environment requires 0 < a < b < c");
    }
    if (!(delta_mu_debye >= 0.0)) {
        throw ValidationError("delta_mu must be >= 0");
    }
}

LorentzianDecomposition lorentzian_params(const ThreeComponentEnvironment& env) {
    env.validate();
    const double eps_ps = env.protein.eps_static, eps_pi = env.protein.eps_inf;
    const double eps_ss = env.solvent.eps_static, eps_si = env.solvent.eps_inf;
    const double eps_bs = env.bound.eps_static, eps_bi = env.bound.eps_inf;

    const double tau_p = env.protein.tau_debye_ps * (2.0 * eps_pi + 1.0) / (2.0 * eps_ps + 1.0);
    const double tau_s = env.solvent.tau_debye_ps * (2.0 * eps_si + eps_pi) / (2.0 * eps_ss + eps_pi);
    const double tau_b = env.bound.tau_debye_ps;

    // Dipole energy scale 3 (d_mu)^2 / (2 pi eps0 r^3) in cm^-1 (r in Angstrom),
    // which is the low-frequency expansion coefficient of the continuum models.
    const double mu2 = env.delta_mu_debye * env.delta_mu_debye;
    const double a3 = std::pow(env.cavity_radius_a, 3);
    const double b3 = std::pow(env.protein_radius_b, 3);
    const double pref_a = 6.0 * mu2 * units::dipole_energy_cm1 / a3;
    const double pref_b = 6.0 * mu2 * units::dipole_energy_cm1 / b3;
    const double layer = (env.shell_radius_c - env.protein_radius_b) / env.protein_radius_b;

    // Reorganisation energies E_x = alpha_x hbar / tau_x of the three terms.
    const double e_protein =
        pref_a * (eps_ps - eps_pi) / ((2.0 * eps_ps + 1.0) * (2.0 * eps_pi + 1.0));
    const double e_solvent = pref_b * eps_pi * (eps_ss - eps_si) /
                             ((2.0 * eps_ss + eps_pi) * (2.0 * eps_si + eps_pi)) *
                             (9.0 * eps_pi / ((2.0 * eps_pi + 1.0) * (2.0 * eps_pi + 1.0)));
    const double e_bound = pref_b * layer * (eps_bs * eps_bs + 2.0 * eps_ss * eps_ss) *
                           (eps_bs - eps_bi) /
                           (eps_bs * eps_bs * (2.0 * eps_ss + eps_pi) * (2.0 * eps_ss + eps_pi));

    LorentzianDecomposition out;
    out.sum.terms = {
        {e_protein * tau_p / units::hbar_cm1_ps, tau_p, ComponentLabel::protein},
        {e_bound * tau_b / units::hbar_cm1_ps, tau_b, ComponentLabel::bound_water},
        {e_solvent * tau_s / units::hbar_cm1_ps, tau_s, ComponentLabel::solvent},
    };
    out.sum.validate();
    out.scale_separation_warning = (tau_p / tau_b < 1e2) || (tau_b / tau_s < 1e2);
    return out;
}

double j_three_component(const ThreeComponentEnvironment& env, double omega_rad_ps) {
    env.validate();
    const EnvironmentModel cavity_part{
        Model4{env.cavity_radius_a, env.protein_radius_b, env.protein, env.solvent},
        env.delta_mu_debye};
    const StaticDielectric eps_p{env.protein.eps_inf};
    const EnvironmentModel with_layer{
        Model5{env.protein_radius_b, env.shell_radius_c, eps_p, env.bound, env.solvent},
        env.delta_mu_debye};
    const EnvironmentModel no_layer{Model3{env.protein_radius_b, eps_p, env.solvent},
                                    env.delta_mu_debye};
    return j_model(cavity_part, omega_rad_ps) + j_model(with_layer, omega_rad_ps) -
           j_model(no_layer, omega_rad_ps);
}

SpectralDensity spectral_density(const ThreeComponentEnvironment& env) {
    env.validate();
    const double hint = std::max({rate_hint(env.protein), rate_hint(env.bound),
                                  rate_hint(env.solvent)});
    ThreeComponentEnvironment copy = env;
    return SpectralDensity::from_function(
        [copy](double w) { return j_three_component(copy, w); }, hint);
}

// ---------------------------------------------------------------------------
// Derived quantities
// ---------------------------------------------------------------------------

double reorganization_energy_cm1(const SpectralDensity& j, IntegrationRoute route,
                                 double rel_tol) {
    if (route != IntegrationRoute::quadrature) {
        if (const auto* sum = j.lorentzians()) return sum->reorganization_energy_cm1();
        if (route == IntegrationRoute::closed_form) {
            throw NumericError("closed-form reorganization energy requires Lorentzian backing");
        }
    }
    quadrature::Options opts;
    opts.rel_tol = rel_tol;
    const double scale = 1.0 / j.fastest_rate();
    try {
        const double integral = quadrature::integrate_to_infinity(
            [&j](double w) { return j(w) / w; }, 0.0, scale, opts);
        return units::hbar_cm1_ps * integral;
    } catch (const NumericError& e) {
        throw NumericError(std::string("reorganization energy: ") + e.what());
    }
}

namespace {

CrossoverResult crossover(const LorentzianSum& sum, ComponentLabel slow_label,
                          ComponentLabel fast_label) {
    const LorentzianTerm* slow = sum.find(slow_label);
    const LorentzianTerm* fast = sum.find(fast_label);
    if (!slow || !fast) {
        throw ValidationError("crossover requires labeled " + component_name(slow_label) +
                              " and " + component_name(fast_label) + " terms");
    }
    if (slow->tau_ps < fast->tau_ps) std::swap(slow, fast);

    // J_fast exceeds J_slow pointwise when its coupling is strictly larger.
    if (slow->alpha < fast->alpha) {
        throw NumericError("no crossover: the " + component_name(fast->label) +
                           " term dominates at every frequency");
    }
    // Conversely the slow term wins everywhere when even its 1/omega tail
    // stays above the fast peak region.
    if (slow->alpha / (slow->tau_ps * slow->tau_ps) >=
        fast->alpha / (fast->tau_ps * fast->tau_ps)) {
        throw NumericError("no crossover: the " + component_name(slow->label) +
                           " term dominates at every frequency");
    }

    CrossoverResult r;
    r.analytic_rad_ps = std::sqrt(slow->alpha / fast->alpha) / slow->tau_ps;
    if (slow->alpha == fast->alpha) {
        // Degenerate: the two terms touch only at omega = 0.
        return r;
    }

    auto diff = [&](double w) {
        const double xs = w * slow->tau_ps, xf = w * fast->tau_ps;
        return slow->alpha * w / (1.0 + xs * xs) - fast->alpha * w / (1.0 + xf * xf);
    };
    // Bisection bracket between the two peak frequencies, widened when the
    // root falls outside (weak scale separation).
    double lo = 1.0 / slow->tau_ps;
    double hi = 1.0 / fast->tau_ps;
    while (diff(lo) <= 0.0 && lo > 1e-12 / slow->tau_ps) lo *= 0.5;
    while (diff(hi) >= 0.0 && hi < 1e12 / fast->tau_ps) hi *= 2.0;
    double flo = diff(lo);
    if ((flo > 0.0) == (diff(hi) > 0.0)) {
        throw NumericError("no crossover: failed to bracket a sign change");
    }
    // Bisection on log(omega); ties break toward the lower frequency.
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < 200 && (lhi - llo) > 1e-13; ++i) {
        const double mid = 0.5 * (llo + lhi);
        const double fm = diff(std::exp(mid));
        if (fm == 0.0) {
            lhi = mid;
            break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            llo = mid;
        } else {
            lhi = mid;
        }
    }
    r.numeric_rad_ps = std::exp(0.5 * (llo + lhi));
    return r;
}

} // namespace

CrossoverResult crossover_protein_solvent(const LorentzianSum& sum) {
    return crossover(sum, ComponentLabel::protein, ComponentLabel::solvent);
}

CrossoverResult crossover_bound_bulk(const LorentzianSum& sum) {
    return crossover(sum, ComponentLabel::bound_water, ComponentLabel::solvent);
}

BoundSolventRatio bound_to_solvent_ratio(const ThreeComponentEnvironment& env) {
    env.validate();
    const double eps_pi = env.protein.eps_inf;
    const double eps_ss = env.solvent.eps_static, eps_si = env.solvent.eps_inf;
    const double eps_bs = env.bound.eps_static, eps_bi = env.bound.eps_inf;

    const double tau_s = env.solvent.tau_debye_ps * (2.0 * eps_si + eps_pi) / (2.0 * eps_ss + eps_pi);
    const double layer = (env.shell_radius_c - env.protein_radius_b) / env.protein_radius_b;

    const double bound_part = (eps_bs * eps_bs + 2.0 * eps_ss * eps_ss) * (eps_bs - eps_bi) /
                              (eps_bs * eps_bs * (2.0 * eps_ss + eps_pi) * (2.0 * eps_ss + eps_pi));
    const double solvent_part = eps_pi * (eps_ss - eps_si) /
                                ((2.0 * eps_ss + eps_pi) * (2.0 * eps_si + eps_pi)) *
                                (9.0 * eps_pi / ((2.0 * eps_pi + 1.0) * (2.0 * eps_pi + 1.0)));

    BoundSolventRatio out;
    out.dielectric_factor = bound_part / solvent_part;
    out.ratio = layer * (env.bound.tau_debye_ps / tau_s) * out.dielectric_factor;
    return out;
}

std::string regime_name(CoherenceRegime r) {
    switch (r) {
        case CoherenceRegime::coherent:      return "coherent";
        case CoherenceRegime::incoherent:    return "incoherent";
        case CoherenceRegime::localized:     return "localized";
        case CoherenceRegime::boundary:      return "boundary";
        case CoherenceRegime::indeterminate: return "indeterminate";
    }
    return "?";
}

RegimeClassification classify_regime(double alpha, double temperature_kelvin, double delta_cm1,
                                     double omega_c_rad_ps) {
    if (alpha < 0.0 || temperature_kelvin < 0.0 || delta_cm1 < 0.0 || omega_c_rad_ps < 0.0) {
        throw ValidationError("classify_regime requires non-negative inputs");
    }
    RegimeClassification out;
    const double cutoff_cm1 = units::hbar_cm1_ps * omega_c_rad_ps;
    const bool scaling_limit = cutoff_cm1 > 0.0 && delta_cm1 / cutoff_cm1 < 0.1;
    if (temperature_kelvin > 0.0 || !scaling_limit) {
        out.regime = CoherenceRegime::indeterminate;
        out.note = temperature_kelvin > 0.0
                       ? "finite temperature narrows the coherent window; no closed rule"
                       : "tunneling amplitude is not small against the bath cutoff; "
                         "coherence can survive to much larger alpha";
        return out;
    }
    if (alpha == 0.5 || alpha == 1.0) {
        out.regime = CoherenceRegime::boundary;
    } else if (alpha < 0.5) {
        out.regime = CoherenceRegime::coherent;
    } else if (alpha < 1.0) {
        out.regime = CoherenceRegime::incoherent;
    } else {
        out.regime = CoherenceRegime::localized;
    }
    return out;
}

} // namespace solvspec
