// dynamics.hpp — observables of a two-level system dephased by a harmonic
// environment with spectral density J(omega): phase shift, decoherence
// exponent, reduced density matrix, dynamic Stokes shift, hydration
// correlation function and echo peak shift.
//
// Conventions: J in rad/ps, energies in cm^-1, times in ps, temperatures in K.
// T = 0 is accepted everywhere except exponential_time and means coth -> 1.
// Semi-infinite frequency integrals are cut off at
// omega_max = 10^3 * max(fastest rate of J, 1/t); spectral densities with a
// 1/omega tail make tail-sensitive quantities (tau_g) depend on that
// documented cutoff.
#pragma once

#include <complex>
#include <optional>

#include "solvspec/quadrature.hpp"
#include "solvspec/spectral.hpp"
#include "solvspec/spectral_density.hpp"

namespace solvspec::dynamics {

struct TwoLevelState {
    std::complex<double> amp_ground{1.0, 0.0};
    std::complex<double> amp_excited{0.0, 0.0};
    double epsilon_cm1 = 0.0;  // level splitting

    void validate() const;  // |a|^2 + |b|^2 = 1 within 1e-12
};

struct DensityMatrixPoint {
    double t_ps = 0.0;
    double rho11 = 1.0;
    double rho22 = 0.0;
    std::complex<double> rho12{0.0, 0.0};
};

using quadrature::Options;

// theta(t) = integral of J(w) (w t - sin(w t))/w^2.  Dimensionless.
double phase_shift(const SpectralDensity& j, double t_ps,
                   IntegrationRoute route = IntegrationRoute::automatic,
                   const Options& opts = {});

// Gamma(t, T) = integral of J(w) coth(hbar w / 2 kT) (1 - cos(w t))/w^2.
double decoherence_gamma(const SpectralDensity& j, double t_ps, double temperature_kelvin,
                         const Options& opts = {});

// Short-time Gaussian decay time: 1/tau_g^2 = integral of J(w) coth(.) dw.
// `tau_g_high_t_ps` carries the closed form hbar/sqrt(2 E_R kT) whenever
// kT > 5 hbar w_peak.
struct GaussianTime {
    double tau_g_ps = 0.0;
    std::optional<double> tau_g_high_t_ps;
};
GaussianTime gaussian_time(const SpectralDensity& j, double temperature_kelvin,
                           const Options& opts = {});

// Thermal-regime decay time tau_d = hbar / (2 alpha kT).  Rejects T <= 0.
double exponential_time(double alpha, double temperature_kelvin);

// rho11 = |a|^2, rho22 = |b|^2,
// rho12 = conj(a) b exp(-i eps t / hbar + i theta(t) - Gamma(t, T)).
DensityMatrixPoint density_matrix(const TwoLevelState& state, const SpectralDensity& j,
                                  double temperature_kelvin, double t_ps,
                                  const Options& opts = {});

// Golden-rule dephasing rate 1/T2 = J(delta/hbar) coth(delta / 2 kT) in 1/ps.
// `weak_coupling` is false when J(delta/hbar) is not small against delta/hbar
// and the rate should be treated as an estimate only.
struct DephasingRate {
    double rate_per_ps = 0.0;
    bool weak_coupling = true;
};
DephasingRate dephasing_rate(const SpectralDensity& j, double delta_cm1,
                             double temperature_kelvin);

// Time-dependent emission energy nu(t) = eps - E_R -+ hbar * integral of
// (J/w) cos(wt).  `as_printed` keeps the minus sign (nu(0) = eps - 2 E_R);
// `relaxing` flips it so nu decays from eps at t = 0.  Quadrature failures
// are reported with the offending t.
enum class StokesConvention { as_printed, relaxing };
double stokes_shift_nu_cm1(const SpectralDensity& j, double epsilon_cm1, double t_ps,
                           StokesConvention convention = StokesConvention::as_printed,
                           IntegrationRoute route = IntegrationRoute::automatic,
                           const Options& opts = {});

// Normalised hydration correlation C(t) = (hbar/E_R) integral of (J/w) cos(wt);
// C(0) = 1.  Lorentzian backing evaluates sum A_j exp(-t/tau_j) analytically
// with A_j the fractional reorganisation energies.
double hydration_correlation(const SpectralDensity& j, double t_ps,
                             IntegrationRoute route = IntegrationRoute::automatic,
                             const Options& opts = {});

// Long-time three-pulse echo peak shift S(t) = (tau_g / sqrt(pi)) C(t), in ps.
double echo_peak_shift_ps(const SpectralDensity& j, double temperature_kelvin, double t_ps,
                          const Options& opts = {});

} // namespace solvspec::dynamics
