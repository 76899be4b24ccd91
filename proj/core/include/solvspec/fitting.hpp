// fitting.hpp — multi-exponential fits of hydration-correlation data and
// their conversion to Lorentzian spectral densities and dimensionless
// couplings.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "solvspec/spectral_density.hpp"

namespace solvspec::fitting {

struct CorrelationPoint {
    double t_ps = 0.0;
    double c = 0.0;
    std::optional<double> sigma;  // weight = 1/sigma when present
};

struct CorrelationSamples {
    std::vector<CorrelationPoint> points;

    void validate() const;  // t strictly increasing, first t >= 0, sigma > 0
};

// Parses two- or three-column delimited text (t_ps, C[, sigma]); '#' starts a
// comment, commas and whitespace both delimit.  Throws ParseError with the
// line number on malformed input.
CorrelationSamples parse_correlation(std::istream& in);
CorrelationSamples load_correlation_file(const std::string& path);

struct FitComponent {
    double weight = 0.0;  // A_j, weights sum to 1 by construction
    double tau_ps = 0.0;
};

struct ExponentialFit {
    std::vector<FitComponent> components;  // sorted by ascending tau
    double residual_rms = 0.0;
    bool converged = false;
    // Two relaxation times within 1% of each other: the component count is
    // effectively degenerate.
    bool degenerate_taus = false;
};

struct FitOptions {
    int starts = 8;             // multi-start count (>= 8 recommended)
    int max_iterations = 400;
    double gradient_tol = 1e-10;
    std::uint64_t seed = 0;     // affects start ordering/jitter only
};

// Weighted least squares of C(t) ~ sum_j A_j exp(-t/tau_j) with the weights
// constrained to the simplex (softmax parameterisation) and tau_j > 0
// (log parameterisation), refined by a damped Gauss-Newton iteration from
// log-spaced tau seeds spanning the data's time range.  Returns the best of
// the multi-starts; non-convergence is flagged, not thrown.
ExponentialFit fit_multiexponential(const CorrelationSamples& data, int n_components,
                                    const FitOptions& opts = {});

// alpha_j = 2 E_R A_j tau_j / (pi hbar), one per fit component.
std::vector<double> couplings_from_fit(double reorganization_energy_cm1,
                                       const ExponentialFit& fit);

// The spectral density sum alpha_j w/(1+(w tau_j)^2) equivalent to the fit.
LorentzianSum lorentzian_from_fit(double reorganization_energy_cm1,
                                  const ExponentialFit& fit);

// Historical shortcut coefficient alpha_j ~ 0.25 A_j (E_R/cm^-1)(tau_j/ps);
// kept for comparison output only.  The exact coefficient 2/(pi hbar) is
// what couplings_from_fit uses.
inline constexpr double quick_estimate_coefficient = 0.25;

} // namespace solvspec::fitting
