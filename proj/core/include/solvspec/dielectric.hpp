// dielectric.hpp — frequency-dependent complex permittivities in the Debye
// approximation.
//
// Sign convention: eps(omega) = eps_inf + (eps_static - eps_inf)/(1 - i omega tau_D),
// so Im eps(omega) >= 0 for all omega >= 0 (passive media).
#pragma once

#include <complex>
#include <variant>

#include "solvspec/errors.hpp"

namespace solvspec {

// Single-relaxation-time Debye medium.
struct DebyeDielectric {
    double eps_static = 1.0;  // eps(0)
    double eps_inf = 1.0;     // eps(omega -> infinity)
    double tau_debye_ps = 1.0;

    // Enforces eps_static >= eps_inf >= 1 and tau_D > 0.
    void validate() const;
};

// Frequency-independent medium (also used for the chromophore cavity).
struct StaticDielectric {
    double eps = 1.0;

    void validate() const;  // eps >= 1
};

using Dielectric = std::variant<StaticDielectric, DebyeDielectric>;

std::complex<double> permittivity(const DebyeDielectric& d, double omega_rad_ps);
std::complex<double> permittivity(const StaticDielectric& d, double omega_rad_ps);
std::complex<double> permittivity(const Dielectric& d, double omega_rad_ps);

void validate(const Dielectric& d);

// Debye relaxation time if the medium has one, 0 for static media.  Used to
// pick frequency grids and quadrature cutoffs.
double relaxation_time_ps(const Dielectric& d);

} // namespace solvspec
