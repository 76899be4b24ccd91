// spectral_density.hpp — spectral density J(omega) representations.
//
// J(omega) is carried in rad/ps everywhere.  A SpectralDensity is either a
// sum of Lorentzians J = sum_j alpha_j * omega / (1 + (omega tau_j)^2), an
// arbitrary evaluator (closed-form continuum models), or a tabulated grid.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "solvspec/errors.hpp"

namespace solvspec {

enum class ComponentLabel { unlabeled, protein, bound_water, solvent };

std::string component_name(ComponentLabel label);

struct LorentzianTerm {
    double alpha = 0.0;   // dimensionless coupling, >= 0
    double tau_ps = 1.0;  // relaxation time, > 0
    ComponentLabel label = ComponentLabel::unlabeled;
};

// J(omega) = sum_j alpha_j omega / (1 + (omega tau_j)^2).
struct LorentzianSum {
    std::vector<LorentzianTerm> terms;

    void validate() const;

    // Reorganisation energy sum pi alpha_j hbar / (2 tau_j) in cm^-1.
    double reorganization_energy_cm1() const;

    const LorentzianTerm* find(ComponentLabel label) const;

    // Largest 1/tau_j; 0 for an empty sum.
    double fastest_rate() const;
};

double eval_lorentzian(const LorentzianSum& sum, double omega_rad_ps);

// Tabulated (omega_k, J_k) grid with linear interpolation; J = 0 outside the
// grid's frequency range.
struct TabulatedDensity {
    std::vector<std::pair<double, double>> points;  // strictly increasing omega

    void validate() const;
    double operator()(double omega_rad_ps) const;
};

class SpectralDensity {
public:
    SpectralDensity() : backing_(LorentzianSum{}) {}

    static SpectralDensity from_lorentzians(LorentzianSum sum);
    // `fastest_rate_hint` approximates the highest 1/tau in the response and
    // steers quadrature cutoffs.
    static SpectralDensity from_function(std::function<double(double)> j,
                                         double fastest_rate_hint);
    static SpectralDensity from_table(TabulatedDensity table);

    // J(omega) in rad/ps.
    double operator()(double omega_rad_ps) const;

    const LorentzianSum* lorentzians() const;
    double fastest_rate() const { return fastest_rate_; }

private:
    std::variant<LorentzianSum, std::function<double(double)>, TabulatedDensity> backing_;
    double fastest_rate_ = 1.0;
};

} // namespace solvspec
