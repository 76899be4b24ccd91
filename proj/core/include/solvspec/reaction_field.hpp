// reaction_field.hpp — reaction-field susceptibility of a point dipole at the
// centre of a spherical cavity surrounded by one dielectric shell and a bulk
// medium.
//
// chi(omega) is returned in 1/Angstrom^3 with the convention
//   chi = (2/a^3) * [ (ep+2ec)(ee-ep) a^3 + (ep-ec)(2ee+ep) b^3 ]
//                 / [ 2(ep-ec)(ee-ep) a^3 + (2ep+ec)(2ee+ep) b^3 ],
// every epsilon evaluated at omega.  The reaction field is R = chi * mu.  The
// matching spectral density applies the dipole energy scale divided by hbar
// exactly once, so that J(omega) comes out in rad/ps.
#pragma once

#include <complex>
#include <functional>

#include "solvspec/dielectric.hpp"
#include "solvspec/spectral_density.hpp"

namespace solvspec {

struct ThreeRegionGeometry {
    double cavity_radius_a = 1.0;  // Angstrom
    double shell_radius_b = 2.0;   // Angstrom
    Dielectric eps_cavity = StaticDielectric{1.0};
    Dielectric eps_shell = StaticDielectric{1.0};
    Dielectric eps_bulk = StaticDielectric{1.0};

    void validate() const;  // 0 < a < b and all media valid
};

struct DipoleSource {
    double delta_mu_debye = 1.0;

    void validate() const;  // delta_mu >= 0
};

// Closed-form chi(omega).  Throws NumericError for a degenerate denominator
// (|den| below 1e-14 of its leading b^3 term).
std::complex<double> chi_closed_form(const ThreeRegionGeometry& g, double omega_rad_ps);

// Same quantity via the n=1 spherical-harmonic boundary-value problem: a 4x4
// complex linear system in the potential coefficients (A_c, A_p, B_p, B_e)
// assembled from continuity of phi and eps dphi/dr at r=a and r=b, solved
// with partial pivoting.  Serves as the independent oracle for the closed
// form.  Throws NumericError (with a condition estimate) if the system is
// numerically singular.
std::complex<double> chi_linear_solve(const ThreeRegionGeometry& g, double omega_rad_ps);

// J(omega) = dipole energy scale * Im chi(omega) / hbar, in rad/ps.
// `chi` must be passive (Im chi >= 0 for omega >= 0); `fastest_rate_hint` as
// in SpectralDensity::from_function.
SpectralDensity spectral_density_from_chi(const DipoleSource& src,
                                          std::function<std::complex<double>(double)> chi,
                                          double fastest_rate_hint);

// Conversion factor F such that J(omega) = F * Im chi(omega) for chi in
// 1/Angstrom^3 and delta_mu in Debye.
double chi_to_j_factor(const DipoleSource& src);

} // namespace solvspec
