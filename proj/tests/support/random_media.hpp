// random_media.hpp — seeded generators for passive dielectrics, geometries and
// Lorentzian sums used by the property-style tests.
#pragma once

#include <random>

#include "solvspec/dielectric.hpp"
#include "solvspec/reaction_field.hpp"
#include "solvspec/spectral_density.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline double log_uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

inline double uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return u(rng);
}

inline solvspec::DebyeDielectric random_debye(Rng& rng) {
    const double eps_inf = uniform(rng, 1.0, 6.0);
    const double eps_static = eps_inf + log_uniform(rng, 1e-2, 100.0);
    const double tau = log_uniform(rng, 1e-2, 1e4);
    return {eps_static, eps_inf, tau};
}

inline solvspec::StaticDielectric random_static(Rng& rng) {
    return {uniform(rng, 1.0, 40.0)};
}

inline solvspec::Dielectric random_dielectric(Rng& rng) {
    if (rng() % 4 == 0) return random_static(rng);
    return random_debye(rng);
}

// The cavity holds the chromophore and is always a lossless constant (as in
// the continuum models); only lossless cavities make Im chi a passive
// response.  Shell and bulk may relax.
inline solvspec::ThreeRegionGeometry random_geometry(Rng& rng) {
    solvspec::ThreeRegionGeometry g;
    g.cavity_radius_a = log_uniform(rng, 1.0, 10.0);
    g.shell_radius_b = g.cavity_radius_a * log_uniform(rng, 1.05, 30.0);
    g.eps_cavity = random_static(rng);
    g.eps_shell = random_dielectric(rng);
    g.eps_bulk = random_dielectric(rng);
    return g;
}

inline solvspec::LorentzianSum random_lorentzians(Rng& rng, int n_terms,
                                                  double tau_ratio_min = 1.0) {
    solvspec::LorentzianSum sum;
    double tau = log_uniform(rng, 1e-2, 1.0);
    for (int j = 0; j < n_terms; ++j) {
        sum.terms.push_back({log_uniform(rng, 1e-2, 30.0), tau,
                             solvspec::ComponentLabel::unlabeled});
        tau *= tau_ratio_min * log_uniform(rng, 1.0, 10.0);
    }
    return sum;
}

} // namespace testsupport
