// spectral.hpp — continuum-dielectric environment models, their closed-form
// spectral densities, the three-Lorentzian decomposition of a
// protein/bound-water/solvent environment, reorganisation energies, crossover
// frequencies, and coherence-regime classification.
//
// All operations are pure; evaluating J on omega grids is safe to parallelise.
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "solvspec/reaction_field.hpp"
#include "solvspec/spectral_density.hpp"

namespace solvspec {

// Chromophore in a cavity of radius a directly inside the solvent.
struct Model1 {
    double cavity_radius_a = 3.0;  // Angstrom
    StaticDielectric eps_cavity{1.0};
    DebyeDielectric solvent;
};

// Chromophore in a cavity of radius a inside an unbounded protein medium.
struct Model2 {
    double cavity_radius_a = 3.0;
    StaticDielectric eps_cavity{1.0};
    DebyeDielectric protein;
};

// Chromophore at the centre of a uniform protein sphere of radius b with a
// constant dielectric, surrounded by solvent.
struct Model3 {
    double protein_radius_b = 10.0;
    StaticDielectric eps_protein{2.0};
    DebyeDielectric solvent;
};

// Vacuum cavity of radius a inside a relaxing protein sphere of radius b,
// surrounded by solvent.
struct Model4 {
    double cavity_radius_a = 3.0;
    double protein_radius_b = 10.0;
    DebyeDielectric protein;
    DebyeDielectric solvent;
};

// Static protein sphere of radius b wrapped in a bound-water shell of outer
// radius c, surrounded by bulk solvent.
struct Model5 {
    double protein_radius_b = 10.0;
    double shell_radius_c = 14.5;
    StaticDielectric eps_protein{2.0};
    DebyeDielectric bound_water;
    DebyeDielectric solvent;
};

struct EnvironmentModel {
    std::variant<Model1, Model2, Model3, Model4, Model5> medium;
    double delta_mu_debye = 1.0;

    void validate() const;
};

// Closed-form J(omega) in rad/ps for the selected model.
double j_model(const EnvironmentModel& m, double omega_rad_ps);

// Same model wrapped as a SpectralDensity (with a quadrature rate hint).
SpectralDensity spectral_density(const EnvironmentModel& m);

// Equivalent three-region geometry and radial prefactor used by j_model;
// exposed so the reaction-field route can be cross-checked directly.
ThreeRegionGeometry three_region_geometry(const EnvironmentModel& m);
double prefactor_radius_angstrom(const EnvironmentModel& m);

// ---------------------------------------------------------------------------
// Three-component environment and its Lorentzian decomposition
// ---------------------------------------------------------------------------

struct ThreeComponentEnvironment {
    DebyeDielectric protein;
    DebyeDielectric bound;
    DebyeDielectric solvent;
    double cavity_radius_a = 3.0;   // chromophore pocket
    double protein_radius_b = 10.0; // protein surface
    double shell_radius_c = 14.5;   // outer edge of the bound-water layer
    double delta_mu_debye = 1.0;

    void validate() const;  // a < b < c
};

// Separated-timescale decomposition J = sum_x alpha_x w/(1+(w tau_x)^2) with
// x in {protein, bound, solvent}:
//   tau_p = tau_Dp (2 eps_pi + 1)/(2 eps_ps + 1)
//   tau_s = tau_Ds (2 eps_si + eps_pi)/(2 eps_ss + eps_pi)
//   tau_b = tau_Db
// and couplings alpha_x from the leading-order expansion of the continuum
// models, made dimensionless by dividing the energy prefactor by hbar.
// Adjacent tau ratios below 10^2 set `scale_separation_warning` (the peaks of
// the three Lorentzians may merge).
struct LorentzianDecomposition {
    LorentzianSum sum;
    bool scale_separation_warning = false;
};
LorentzianDecomposition lorentzian_params(const ThreeComponentEnvironment& env);

// Exact composed spectral density of the three-component environment:
// Model 4 for the cavity/protein/solvent part plus the bound-layer correction
// (Model 5 minus its zero-thickness limit).
double j_three_component(const ThreeComponentEnvironment& env, double omega_rad_ps);
SpectralDensity spectral_density(const ThreeComponentEnvironment& env);

// ---------------------------------------------------------------------------
// Derived quantities
// ---------------------------------------------------------------------------

enum class IntegrationRoute { automatic, closed_form, quadrature };

// E_R = hbar * integral of J(w)/w, in cm^-1.  Lorentzian backing uses the
// closed form sum pi alpha_j hbar/(2 tau_j) unless quadrature is forced.
// Throws NumericError when the integral fails to converge.
double reorganization_energy_cm1(const SpectralDensity& j,
                                 IntegrationRoute route = IntegrationRoute::automatic,
                                 double rel_tol = 1e-8);

struct CrossoverResult {
    double analytic_rad_ps = 0.0;  // (1/tau_slow) sqrt(alpha_slow/alpha_fast)
    // Bisection root of J_slow(w) = J_fast(w); absent in the degenerate
    // equal-coupling case where the two terms only touch at w = 0.
    std::optional<double> numeric_rad_ps;
};

// Frequency where the protein and solvent terms contribute equally.  Requires
// labeled protein and solvent terms; throws NumericError if one term
// dominates everywhere (no crossover).
CrossoverResult crossover_protein_solvent(const LorentzianSum& sum);

// Same for the bound-water and solvent terms.
CrossoverResult crossover_bound_bulk(const LorentzianSum& sum);

// alpha_b / alpha_s expressed as ((c-b)/b) * (tau_b/tau_s) * dielectric
// factor; algebraically identical to the ratio of lorentzian_params couplings.
struct BoundSolventRatio {
    double ratio = 0.0;
    double dielectric_factor = 0.0;
};
BoundSolventRatio bound_to_solvent_ratio(const ThreeComponentEnvironment& env);

enum class CoherenceRegime { coherent, incoherent, localized, boundary, indeterminate };

struct RegimeClassification {
    CoherenceRegime regime = CoherenceRegime::indeterminate;
    std::string note;
};

std::string regime_name(CoherenceRegime r);

// Zero-temperature ohmic phase diagram in the scaling limit delta << hbar*w_c:
// coherent for alpha < 1/2, incoherent for 1/2 < alpha < 1, localized for
// alpha > 1, exact boundaries labeled as such.  Outside that limit (or at
// T > 0) only numerical results exist, so the label is indeterminate with a
// note.
RegimeClassification classify_regime(double alpha, double temperature_kelvin,
                                     double delta_cm1, double omega_c_rad_ps);

} // namespace solvspec
