#include "solvspec/dynamics.hpp"

#include <cmath>
#include <string>

#include "solvspec/units.hpp"

namespace solvspec::dynamics {

namespace {

constexpr double kCutoffMultiple = 1e3;

double coth_clamped(double x) {
    if (x > 20.0) return 1.0;
    if (x < 1e-4) return 1.0 / x + x / 3.0;
    return 1.0 / std::tanh(x);
}

// coth(hbar w / 2 kT), with T = 0 meaning the zero-point value 1.
double thermal_coth(double omega, double temperature) {
    if (temperature <= 0.0) return 1.0;
    const double kt = units::k_boltzmann_cm1_per_kelvin * temperature;
    return coth_clamped(units::hbar_cm1_ps * omega / (2.0 * kt));
}

// (1 - cos x)/x^2 without cancellation.
double one_minus_cos_over_x2(double x) {
    if (std::abs(x) < 1e-2) {
        const double x2 = x * x;
        return 0.5 - x2 / 24.0 + x2 * x2 / 720.0;
    }
    return (1.0 - std::cos(x)) / (x * x);
}

// (x - sin x)/x^2 without cancellation.
double x_minus_sin_over_x2(double x) {
    if (std::abs(x) < 1e-2) {
        const double x2 = x * x;
        return x / 6.0 * (1.0 - x2 / 20.0 + x2 * x2 / 840.0);
    }
    return (x - std::sin(x)) / (x * x);
}

double omega_cutoff(const SpectralDensity& j, double t_ps) {
    const double rate = t_ps > 0.0 ? std::max(j.fastest_rate(), 1.0 / t_ps) : j.fastest_rate();
    return kCutoffMultiple * rate;
}

void check_time(double t) {
    if (t < 0.0) throw UnitError("time must be >= 0, got " + std::to_string(t) + " ps");
}

void check_temperature(double temperature) {
    if (temperature < 0.0) {
        throw UnitError("temperature must be >= 0, got " + std::to_string(temperature) + " K");
    }
}

// integral of (J/w) cos(wt) over [0, cutoff) by half-period panel summation.
double cosine_transform(const SpectralDensity& j, double t, const Options& opts) {
    const double wmax = omega_cutoff(j, t);
    const double head_hi = std::min(M_PI / t, wmax);
    auto head = [&](double w) { return j(w) / w * std::cos(w * t); };
    double out = quadrature::integrate(head, 0.0, head_hi, opts);
    if (head_hi < wmax) {
        out += quadrature::fourier_cos([&](double w) { return j(w) / w; }, t, head_hi, wmax,
                                       opts);
    }
    return out;
}

} // namespace

void TwoLevelState::validate() const {
    const double norm = std::norm(amp_ground) + std::norm(amp_excited);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw ValidationError("state must be normalised: |a|^2 + |b|^2 = " +
                              std::to_string(norm));
    }
}

double phase_shift(const SpectralDensity& j, double t_ps, IntegrationRoute route,
                   const Options& opts) {
    check_time(t_ps);
    if (t_ps == 0.0) return 0.0;

    if (route != IntegrationRoute::quadrature) {
        if (const auto* sum = j.lorentzians()) {
            double theta = 0.0;
            for (const auto& term : sum->terms) {
                const double x = t_ps / term.tau_ps;
                // t/tau - (1 - exp(-t/tau)), stable for small x
                theta += 0.5 * M_PI * term.alpha * (x + std::expm1(-x));
            }
            return theta;
        }
        if (route == IntegrationRoute::closed_form) {
            throw NumericError("closed-form phase shift requires Lorentzian backing");
        }
    }

    const double wmax = omega_cutoff(j, t_ps);
    const double head_hi = std::min(M_PI / t_ps, wmax);
    auto head = [&](double w) {
        return j(w) * t_ps * t_ps * x_minus_sin_over_x2(w * t_ps);
    };
    double theta = quadrature::integrate(head, 0.0, head_hi, opts);
    if (head_hi < wmax) {
        // The linear-in-t part carries the full reorganization integral; its
        // 1/omega^2 tail converges and must not be cut off.
        theta += t_ps * quadrature::integrate_to_infinity(
                            [&](double w) { return j(w) / w; }, head_hi,
                            1.0 / j.fastest_rate(), opts);
        theta -= quadrature::fourier_sin([&](double w) { return j(w) / (w * w); }, t_ps,
                                         head_hi, wmax, opts);
    }
    return theta;
}

double decoherence_gamma(const SpectralDensity& j, double t_ps, double temperature_kelvin,
                         const Options& opts) {
    check_time(t_ps);
    check_temperature(temperature_kelvin);
    if (t_ps == 0.0) return 0.0;

    const double wmax = omega_cutoff(j, t_ps);
    const double head_hi = std::min(M_PI / t_ps, wmax);
    auto envelope = [&](double w) {
        return j(w) * thermal_coth(w, temperature_kelvin);
    };
    auto head = [&](double w) {
        return envelope(w) * t_ps * t_ps * one_minus_cos_over_x2(w * t_ps);
    };
    double gamma = quadrature::integrate(head, 0.0, head_hi, opts);
    if (head_hi < wmax) {
        auto tail_env = [&](double w) { return envelope(w) / (w * w); };
        gamma += quadrature::integrate(tail_env, head_hi, wmax, opts);
        gamma -= quadrature::fourier_cos(tail_env, t_ps, head_hi, wmax, opts);
    }
    return gamma;
}

GaussianTime gaussian_time(const SpectralDensity& j, double temperature_kelvin,
                           const Options& opts) {
    check_temperature(temperature_kelvin);
    const double wmax = kCutoffMultiple * j.fastest_rate();
    auto f = [&](double w) { return j(w) * thermal_coth(w, temperature_kelvin); };
    // Piecewise to resolve both the response peak and the thermal knee.
    const double w1 = std::min(j.fastest_rate(), wmax);
    double inv_tg2 = quadrature::integrate(f, 0.0, w1, opts);
    if (w1 < wmax) {
        const double w2 = std::sqrt(w1 * wmax);
        inv_tg2 += quadrature::integrate(f, w1, w2, opts);
        inv_tg2 += quadrature::integrate(f, w2, wmax, opts);
    }
    if (!(inv_tg2 > 0.0)) {
        throw NumericError("gaussian decoherence time undefined: J integrates to zero");
    }

    GaussianTime out;
    out.tau_g_ps = 1.0 / std::sqrt(inv_tg2);
    const double kt = units::k_boltzmann_cm1_per_kelvin * temperature_kelvin;
    const double peak_cm1 = units::hbar_cm1_ps * j.fastest_rate();
    if (kt > 5.0 * peak_cm1) {
        const double er = reorganization_energy_cm1(j);
        out.tau_g_high_t_ps = units::hbar_cm1_ps / std::sqrt(2.0 * er * kt);
    }
    return out;
}

double exponential_time(double alpha, double temperature_kelvin) {
    if (!(alpha > 0.0)) {
        throw ValidationError("exponential decay time requires alpha > 0");
    }
    if (!(temperature_kelvin > 0.0)) {
        throw UnitError("exponential decay time is undefined at T = 0");
    }
    return units::hbar_cm1_ps /
           (2.0 * alpha * units::k_boltzmann_cm1_per_kelvin * temperature_kelvin);
}

DensityMatrixPoint density_matrix(const TwoLevelState& state, const SpectralDensity& j,
                                  double temperature_kelvin, double t_ps,
                                  const Options& opts) {
    state.validate();
    check_time(t_ps);
    DensityMatrixPoint p;
    p.t_ps = t_ps;
    p.rho11 = std::norm(state.amp_ground);
    p.rho22 = std::norm(state.amp_excited);
    const double theta = phase_shift(j, t_ps, IntegrationRoute::automatic, opts);
    const double gamma = decoherence_gamma(j, t_ps, temperature_kelvin, opts);
    const double phase = -state.epsilon_cm1 * t_ps / units::hbar_cm1_ps + theta;
    p.rho12 = std::conj(state.amp_ground) * state.amp_excited *
              std::polar(std::exp(-gamma), phase);
    return p;
}

DephasingRate dephasing_rate(const SpectralDensity& j, double delta_cm1,
                             double temperature_kelvin) {
    check_temperature(temperature_kelvin);
    if (!(delta_cm1 > 0.0)) {
        throw ValidationError("golden-rule rate requires a positive splitting delta");
    }
    const double omega = delta_cm1 / units::hbar_cm1_ps;
    const double jv = j(omega);
    DephasingRate out;
    double coth = 1.0;
    if (temperature_kelvin > 0.0) {
        coth = coth_clamped(delta_cm1 /
                            (2.0 * units::k_boltzmann_cm1_per_kelvin * temperature_kelvin));
    }
    out.rate_per_ps = jv * coth;
    out.weak_coupling = jv < 0.1 * omega;
    return out;
}

double stokes_shift_nu_cm1(const SpectralDensity& j, double epsilon_cm1, double t_ps,
                           StokesConvention convention, IntegrationRoute route,
                           const Options& opts) {
    check_time(t_ps);
    const double er = reorganization_energy_cm1(
        j, route == IntegrationRoute::quadrature ? IntegrationRoute::quadrature
                                                 : IntegrationRoute::automatic);
    if (route == IntegrationRoute::closed_form && !j.lorentzians()) {
        throw NumericError("closed-form stokes shift requires Lorentzian backing");
    }
    double cos_part_cm1;
    if (t_ps == 0.0) {
        cos_part_cm1 = er;
    } else if (route != IntegrationRoute::quadrature && j.lorentzians()) {
        const auto* sum = j.lorentzians();
        cos_part_cm1 = 0.0;
        for (const auto& term : sum->terms) {
            cos_part_cm1 += M_PI * term.alpha * units::hbar_cm1_ps / (2.0 * term.tau_ps) *
                            std::exp(-t_ps / term.tau_ps);
        }
    } else {
        Options osc = opts;
        osc.abs_tol = std::max(osc.abs_tol, 0.05 * opts.rel_tol * er / units::hbar_cm1_ps);
        try {
            cos_part_cm1 = units::hbar_cm1_ps * cosine_transform(j, t_ps, osc);
        } catch (const NumericError& e) {
            throw NumericError("stokes shift at t = " + std::to_string(t_ps) +
                               " ps: " + e.what());
        }
    }
    const double sign = convention == StokesConvention::as_printed ? -1.0 : 1.0;
    return epsilon_cm1 - er + sign * cos_part_cm1;
}

double hydration_correlation(const SpectralDensity& j, double t_ps, IntegrationRoute route,
                             const Options& opts) {
    check_time(t_ps);
    if (t_ps == 0.0) return 1.0;

    if (route != IntegrationRoute::quadrature) {
        if (const auto* sum = j.lorentzians()) {
            const double er = sum->reorganization_energy_cm1();
            if (!(er > 0.0)) {
                throw NumericError("hydration correlation undefined for zero "
                                   "reorganization energy");
            }
            double c = 0.0;
            for (const auto& term : sum->terms) {
                const double er_j =
                    M_PI * term.alpha * units::hbar_cm1_ps / (2.0 * term.tau_ps);
                c += er_j / er * std::exp(-t_ps / term.tau_ps);
            }
            return c;
        }
        if (route == IntegrationRoute::closed_form) {
            throw NumericError("closed-form hydration correlation requires Lorentzian backing");
        }
    }

    const double er = reorganization_energy_cm1(j, IntegrationRoute::quadrature);
    if (!(er > 0.0)) {
        throw NumericError("hydration correlation undefined for zero reorganization energy");
    }
    // Target an absolute error well inside opts.rel_tol on the normalised C.
    Options osc = opts;
    osc.abs_tol = std::max(osc.abs_tol, 0.05 * opts.rel_tol * er / units::hbar_cm1_ps);
    try {
        return units::hbar_cm1_ps * cosine_transform(j, t_ps, osc) / er;
    } catch (const NumericError& e) {
        throw NumericError("hydration correlation at t = " + std::to_string(t_ps) +
                           " ps: " + e.what());
    }
}

double echo_peak_shift_ps(const SpectralDensity& j, double temperature_kelvin, double t_ps,
                          const Options& opts) {
    const GaussianTime tg = gaussian_time(j, temperature_kelvin, opts);
    return tg.tau_g_ps / std::sqrt(M_PI) * hydration_correlation(j, t_ps,
                                                                 IntegrationRoute::automatic,
                                                                 opts);
}

} // namespace solvspec::dynamics
