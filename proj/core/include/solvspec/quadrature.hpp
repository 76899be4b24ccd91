// quadrature.hpp — adaptive Gauss-Kronrod integration plus the half-period
// panel scheme used for the oscillatory sin/cos transforms of spectral
// densities.
#pragma once

#include <functional>

#include "solvspec/errors.hpp"

namespace solvspec::quadrature {

using Integrand = std::function<double(double)>;

struct Options {
    double rel_tol = 1e-7;
    double abs_tol = 0.0;   // absolute floor; 0 means purely relative
    int max_depth = 48;     // adaptive bisection depth
};

// Adaptive 15-point Gauss-Kronrod over a finite interval.
double integrate(const Integrand& f, double lo, double hi, const Options& opts = {});

// Integral of f over [lo, infinity) for integrands that decay.  Doubles the
// panel width geometrically starting from `scale` and stops once the running
// tail is negligible.  Throws NumericError when successive octaves stop
// decaying (divergent or too-slowly-decaying tail).
double integrate_to_infinity(const Integrand& f, double lo, double scale,
                             const Options& opts = {});

// Oscillatory transforms: integral over [lo, hi] of f(w) * cos(w t) (or sin).
// The domain is split at the half-periods k*pi/t; each panel is integrated
// with the Gauss-Kronrod rule and panels are summed until either hi is
// reached or (after a minimum of 50 panels) the alternating panel sums drop
// below tolerance, at which point an integration-by-parts tail estimate is
// added.  `hi` may be infinity as long as f decays.
double fourier_cos(const Integrand& f, double t, double lo, double hi,
                   const Options& opts = {});
double fourier_sin(const Integrand& f, double t, double lo, double hi,
                   const Options& opts = {});

// Non-adaptive 15-point Gauss-Kronrod on one interval; returns the rule value
// and writes the embedded error estimate.  Exposed for tests.
double gauss_kronrod_15(const Integrand& f, double lo, double hi, double* abs_err);

} // namespace solvspec::quadrature
