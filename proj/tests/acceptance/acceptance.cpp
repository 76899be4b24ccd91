// Acceptance suite: one criterion per function, each printing a [PASS]/[FAIL]
// line with the measured quantities.  Run all criteria or a single one with
// --criterion N.  Exit code is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "random_media.hpp"
#include "solvspec/datasets.hpp"
#include "solvspec/dynamics.hpp"
#include "solvspec/fitting.hpp"
#include "solvspec/units.hpp"

using namespace solvspec;
namespace dyn = solvspec::dynamics;
namespace fit = solvspec::fitting;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        detail += (detail.empty() ? "" : "; ") + what + (ok ? " [ok]" : " [FAILED]");
    }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const DebyeDielectric kWater{78.3, 4.21, 8.2};
const DebyeDielectric kProtein{15.0, 2.0, 1e4};
const DebyeDielectric kBound{40.0, 4.21, 40.0};

// --------------------------------------------------------------------------
// 1. The boundary-value solver and the closed form are the same function.
// --------------------------------------------------------------------------
Outcome criterion1() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    testsupport::Rng rng(101);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto g = testsupport::random_geometry(rng);
        for (int k = 0; k < 40; ++k) {
            const double w = std::pow(10.0, -6.0 + 10.0 * k / 39.0);
            const auto closed = chi_closed_form(g, w);
            const auto solved = chi_linear_solve(g, w);
            const double scale = std::max(std::abs(closed), 1e-30);
            worst = std::max(worst, std::abs(closed - solved) / scale);
        }
    }
    const double elapsed = seconds_since(t0);
    out.require(worst < 1e-10, "max relative gap " + num(worst) + " < 1e-10");
    out.require(elapsed < 1.0, "runtime " + num(elapsed) + " s < 1 s");
    return out;
}

// --------------------------------------------------------------------------
// 2. Small cavity in a large protein: Model 4 collapses onto Model 2, and the
//    first-order solvent term scales cubically in a/b.
// --------------------------------------------------------------------------
Outcome criterion2() {
    Outcome out;
    const double a = 3.0;
    const double eps_pi = kProtein.eps_inf;
    const double solvent_factor = 9.0 * eps_pi / ((2.0 * eps_pi + 1.0) * (2.0 * eps_pi + 1.0));

    auto j4 = [&](double ab_ratio, double w) {
        return j_model({Model4{a, a / ab_ratio, kProtein, kWater}, 1.0}, w);
    };
    auto j2 = [&](double w) {
        return j_model({Model2{a, StaticDielectric{1.0}, kProtein}, 1.0}, w);
    };
    auto js = [&](double ab_ratio, double w) {
        return solvent_factor *
               j_model({Model3{a / ab_ratio, StaticDielectric{eps_pi}, kWater}, 1.0}, w);
    };

    std::vector<double> omegas;
    for (int k = 0; k <= 40; ++k) {
        omegas.push_back(std::pow(10.0, -1.0 + 2.0 * k / 40.0) / kProtein.tau_debye_ps);
    }

    double worst = 0.0;
    for (double w : omegas) {
        worst = std::max(worst, std::abs(j4(1e-3, w) - j2(w)) / j2(w));
    }
    out.require(worst < 1e-5, "max |J4-J2|/J2 " + num(worst) + " < 1e-5 at a/b = 1e-3");

    auto residual = [&](double ab_ratio) {
        double r = 0.0;
        for (double w : omegas) {
            r = std::max(r, std::abs(j4(ab_ratio, w) - j2(w) - js(ab_ratio, w)));
        }
        return r;
    };
    const double r1 = residual(1e-2);
    const double r2 = residual(5e-3);
    // The reduction factor converges to the cubic value 8 from below
    // (7.9999986 at a/b = 1e-2); allow a 0.1% measurement band, which still
    // cleanly rejects quadratic (4x) or quartic (16x) scaling.
    char ratio_txt[40];
    std::snprintf(ratio_txt, sizeof(ratio_txt), "%.9g", r1 / r2);
    out.require(r1 / r2 >= 8.0 * (1.0 - 1e-3),
                std::string("halving a/b shrinks |J4-J2-Js| by ") + ratio_txt +
                    "x (cubic scaling, 8x within 0.1%)");
    return out;
}

// --------------------------------------------------------------------------
// 3. Thin bound-water shell: Model 5 collapses onto Model 3 and the layer
//    term is linear in the relative thickness.
// --------------------------------------------------------------------------
Outcome criterion3() {
    Outcome out;
    const double b = 10.0;
    const StaticDielectric eps_p{2.0};
    auto j5 = [&](double delta, double w) {
        return j_model({Model5{b, b * (1.0 + delta), eps_p, kBound, kWater}, 1.0}, w);
    };
    auto j3 = [&](double w) { return j_model({Model3{b, eps_p, kWater}, 1.0}, w); };

    double worst = 0.0;
    for (int k = 0; k <= 30; ++k) {
        const double w = std::pow(10.0, -4.0 + 6.0 * k / 30.0);
        worst = std::max(worst, std::abs(j5(1e-6, w) - j3(w)) / std::abs(j3(w)));
    }
    out.require(worst < 1e-4, "max rel gap " + num(worst) + " < 1e-4 at (c-b)/b = 1e-6");

    // Least-squares line through the layer term vs thickness at the bound
    // knee frequency.
    const double w_knee = 1.0 / kBound.tau_debye_ps;
    const double j3_knee = j3(w_knee);
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        const double delta = 1e-4 * std::pow(1e2, i / 19.0);
        xs.push_back(delta);
        ys.push_back(j5(delta, w_knee) - j3_knee);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ss_res += std::pow(ys[i] - slope * xs[i] - intercept, 2);
        ss_tot += std::pow(ys[i] - sy / n, 2);
    }
    const double r2 = 1.0 - ss_res / ss_tot;
    out.require(r2 > 0.999, "layer-term linearity R^2 " + num(r2) + " > 0.999");
    return out;
}

// --------------------------------------------------------------------------
// 4. Reorganisation energy: quadrature against the closed form.
// --------------------------------------------------------------------------
Outcome criterion4() {
    Outcome out;
    testsupport::Rng rng(104);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double alpha = testsupport::log_uniform(rng, 0.05, 50.0);
        const double tau = testsupport::log_uniform(rng, 0.01, 200.0);
        const auto j = SpectralDensity::from_lorentzians({{{alpha, tau}}});
        const double closed = reorganization_energy_cm1(j, IntegrationRoute::closed_form);
        const double quad = reorganization_energy_cm1(j, IntegrationRoute::quadrature);
        worst = std::max(worst, std::abs(quad - closed) / closed);
    }
    out.require(worst < 1e-8, "max relative gap " + num(worst) + " < 1e-8 over 20 draws");
    return out;
}

// --------------------------------------------------------------------------
// 5. Decoherence regime laws for a single Lorentzian (alpha = 1, tau = 1 ps).
// --------------------------------------------------------------------------
Outcome criterion5() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto j = SpectralDensity::from_lorentzians({{{1.0, 1.0}}});
    const double kb = units::k_boltzmann_cm1_per_kelvin;
    const double hbar = units::hbar_cm1_ps;

    // Short time: Gamma approaches t^2/(2 tau_g^2).
    {
        const double t = 1e-3;
        const double gamma = dyn::decoherence_gamma(j, t, 300.0);
        const double tau_g = dyn::gaussian_time(j, 300.0).tau_g_ps;
        const double ratio = gamma / (t * t / (2.0 * tau_g * tau_g));
        out.require(std::abs(ratio - 1.0) < 0.01,
                    "short-time ratio " + num(ratio) + " within 1% of 1");
    }

    // Long time: slope pinned to 2 alpha kT / hbar = 78.55 /ps at 300 K.
    {
        const double slope =
            dyn::decoherence_gamma(j, 10.5, 300.0) - dyn::decoherence_gamma(j, 9.5, 300.0);
        const double target = 2.0 * kb * 300.0 / hbar;  // 78.55
        out.require(std::abs(slope / target - 1.0) < 0.01,
                    "long-time slope " + num(slope) + " /ps within 1% of 2*alpha*kT/hbar = " +
                        num(target) + " (thermal-limit quadrature gives pi*alpha*kT/hbar = " +
                        num(M_PI * kb * 300.0 / hbar) + ")");
    }

    // Intermediate: logarithmic slope alpha inside (1/w_c, hbar/kT) at 1 K.
    {
        const double t_lo = 2.0, t_hi = 3.8;  // centred in (1 ps, 7.64 ps)
        const double slope =
            (dyn::decoherence_gamma(j, t_hi, 1.0) - dyn::decoherence_gamma(j, t_lo, 1.0)) /
            std::log(t_hi / t_lo);
        out.require(std::abs(slope - 1.0) < 0.15,
                    "intermediate log-slope " + num(slope) + " within 15% of alpha = 1");
    }

    const double elapsed = seconds_since(t0);
    out.require(elapsed < 10.0, "runtime " + num(elapsed) + " s < 10 s");
    return out;
}

// --------------------------------------------------------------------------
// 6. Correlation-function round trip: quadrature vs the exponential sum.
// --------------------------------------------------------------------------
Outcome criterion6() {
    Outcome out;
    testsupport::Rng rng(106);
    double worst = 0.0;
    for (int set = 0; set < 3; ++set) {
        LorentzianSum sum;
        double tau = testsupport::log_uniform(rng, 0.05, 0.5);
        for (int k = 0; k < 3; ++k) {
            sum.terms.push_back({testsupport::log_uniform(rng, 0.2, 10.0), tau,
                                 ComponentLabel::unlabeled});
            tau *= testsupport::log_uniform(rng, 4.0, 10.0);
        }
        const auto j = SpectralDensity::from_lorentzians(sum);
        const double t_max = 10.0 * sum.terms.back().tau_ps;
        for (int i = 0; i <= 24; ++i) {
            const double t = t_max * i / 24.0;
            const double analytic = dyn::hydration_correlation(j, t);
            const double quad = dyn::hydration_correlation(j, t, IntegrationRoute::quadrature);
            worst = std::max(worst, std::abs(quad - analytic));
        }
    }
    out.require(worst < 1e-6,
                "max |C_quad - C_exact| " + num(worst) + " < 1e-6 over 3-term sums");
    return out;
}

// --------------------------------------------------------------------------
// 7. Order-of-magnitude couplings of the reference environment.
// --------------------------------------------------------------------------
Outcome criterion7() {
    Outcome out;
    const ThreeComponentEnvironment env{kProtein, kBound, kWater, 3.0, 10.0, 14.5, 1.0};
    const auto sum = lorentzian_params(env).sum;
    const double alpha_s = sum.find(ComponentLabel::solvent)->alpha;
    const double alpha_b = sum.find(ComponentLabel::bound_water)->alpha;
    const double alpha_p = sum.find(ComponentLabel::protein)->alpha;

    auto within_decade = [](double value, double estimate) {
        return value >= estimate / 10.0 && value <= estimate * 10.0;
    };
    out.require(within_decade(alpha_s, 1.0),
                "alpha_s " + num(alpha_s) + " within one decade of 1");
    out.require(within_decade(alpha_b, 10.0),
                "alpha_b " + num(alpha_b) + " within one decade of 10");
    out.require(within_decade(alpha_p, 100.0),
                "alpha_p " + num(alpha_p) + " within one decade of 100");
    return out;
}

// --------------------------------------------------------------------------
// 8. Reference-table pipeline: loading, derived couplings, fit round trip.
// --------------------------------------------------------------------------
Outcome criterion8() {
    Outcome out;

    std::size_t rows = 0;
    bool all_valid = true;
    try {
        const auto data = fit::load_reference_datasets();
        rows = data.solvation.size();
        for (const auto& r : data.solvation) r.validate();
    } catch (const Error&) {
        all_valid = false;
    }
    out.require(all_valid && rows >= 20,
                "bundled table loads and validates (" + std::to_string(rows) +
                    " rows; the published set)");

    fit::ExponentialFit trp;
    trp.components = {{0.55, 0.34}, {0.45, 1.6}};
    const double alpha2 = fit::couplings_from_fit(2193.0, trp)[1];
    out.require(std::abs(alpha2 - 189.4) <= 0.1,
                "Trp/water alpha_2 " + num(alpha2) + " = 189.4 +- 0.1");

    fit::CorrelationSamples synth;
    for (int i = 0; i < 200; ++i) {
        const double t = 1e-3 * std::pow(20.0 / 1e-3, i / 199.0);
        synth.points.push_back(
            {t, 0.55 * std::exp(-t / 0.34) + 0.45 * std::exp(-t / 1.6), std::nullopt});
    }
    const auto fitres = fit::fit_multiexponential(synth, 2);
    const double truth[2][2] = {{0.55, 0.34}, {0.45, 1.6}};
    double worst = 0.0;
    for (int k = 0; k < 2; ++k) {
        worst = std::max(worst,
                         std::abs(fitres.components[k].weight - truth[k][0]) / truth[k][0]);
        worst = std::max(worst,
                         std::abs(fitres.components[k].tau_ps - truth[k][1]) / truth[k][1]);
    }
    out.require(fitres.converged && worst < 1e-3,
                "synthetic round-trip recovery error " + num(worst) + " < 1e-3");
    return out;
}

// --------------------------------------------------------------------------
// 9. Crossover: analytic formula vs the numeric root.
// --------------------------------------------------------------------------
Outcome criterion9() {
    Outcome out;
    testsupport::Rng rng(109);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double tau_s = testsupport::log_uniform(rng, 0.05, 5.0);
        const double tau_p = tau_s * testsupport::log_uniform(rng, 1e3, 1e6);
        const double ratio = testsupport::log_uniform(rng, 3.0, 1e4);
        const LorentzianSum sum{{{ratio, tau_p, ComponentLabel::protein},
                                 {1.0, tau_s, ComponentLabel::solvent}}};
        const auto r = crossover_protein_solvent(sum);
        if (!r.numeric_rad_ps) {
            out.require(false, "numeric root missing");
            return out;
        }
        worst = std::max(worst, std::abs(*r.numeric_rad_ps / r.analytic_rad_ps - 1.0));
    }
    out.require(worst <= 0.25,
                "max |numeric/analytic - 1| " + num(worst) + " <= 25% over 50 draws with "
                "tau_p/tau_s >= 1e3");
    return out;
}

// --------------------------------------------------------------------------
// 10. Randomised property suite (10^4 cases).
// --------------------------------------------------------------------------
Outcome criterion10() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    testsupport::Rng rng(110);
    int cases = 0;
    int failures = 0;

    // 3000 cases: Debye passivity.
    for (int i = 0; i < 3000; ++i, ++cases) {
        const auto d = testsupport::random_debye(rng);
        const double w = (i % 10 == 0) ? 0.0 : testsupport::log_uniform(rng, 1e-8, 1e8);
        if (permittivity(d, w).imag() < 0.0) ++failures;
    }

    // 2000 cases: reaction-field passivity.
    for (int i = 0; i < 2000; ++i, ++cases) {
        const auto g = testsupport::random_geometry(rng);
        const double w = testsupport::log_uniform(rng, 1e-8, 1e6);
        if (chi_closed_form(g, w).imag() < -1e-18) ++failures;
    }

    // 2000 cases: every continuum model is a valid spectral density.
    for (int i = 0; i < 2000; ++i, ++cases) {
        EnvironmentModel m;
        m.delta_mu_debye = testsupport::uniform(rng, 0.0, 3.0);
        const double a = testsupport::log_uniform(rng, 1.0, 8.0);
        const double b = a * testsupport::log_uniform(rng, 1.1, 10.0);
        switch (i % 5) {
            case 0: m.medium = Model1{a, testsupport::random_static(rng),
                                      testsupport::random_debye(rng)}; break;
            case 1: m.medium = Model2{a, testsupport::random_static(rng),
                                      testsupport::random_debye(rng)}; break;
            case 2: m.medium = Model3{b, testsupport::random_static(rng),
                                      testsupport::random_debye(rng)}; break;
            case 3: m.medium = Model4{a, b, testsupport::random_debye(rng),
                                      testsupport::random_debye(rng)}; break;
            default: m.medium = Model5{b, b * testsupport::uniform(rng, 1.01, 2.0),
                                       testsupport::random_static(rng),
                                       testsupport::random_debye(rng),
                                       testsupport::random_debye(rng)}; break;
        }
        if (j_model(m, 0.0) != 0.0) ++failures;
        if (j_model(m, testsupport::log_uniform(rng, 1e-8, 1e6)) < 0.0) ++failures;
    }

    // 2000 cases: Lorentzian sums and tabulated densities.
    for (int i = 0; i < 2000; ++i, ++cases) {
        const auto sum = testsupport::random_lorentzians(rng, 1 + int(rng() % 3));
        const auto j = SpectralDensity::from_lorentzians(sum);
        if (j(0.0) != 0.0) ++failures;
        if (j(testsupport::log_uniform(rng, 1e-8, 1e6)) < 0.0) ++failures;
        if (i % 4 == 0) {
            TabulatedDensity table;
            for (int k = 0; k <= 16; ++k) {
                const double w = 1e-3 * std::pow(1e6, k / 16.0);
                table.points.emplace_back(w, j(w));
            }
            const auto jt = SpectralDensity::from_table(table);
            if (jt(0.0) != 0.0) ++failures;
            if (jt(testsupport::log_uniform(rng, 1e-3, 1e3)) < 0.0) ++failures;
        }
    }

    // 1000 cases: trace preservation and monotone coherence bound.
    dyn::Options loose;
    loose.rel_tol = 1e-5;
    for (int i = 0; i < 1000; ++i, ++cases) {
        const auto sum = testsupport::random_lorentzians(rng, 2);
        const auto j = SpectralDensity::from_lorentzians(sum);
        dyn::TwoLevelState state;
        const double p = testsupport::uniform(rng, 0.05, 0.95);
        state.amp_ground = std::sqrt(p);
        state.amp_excited = std::polar(std::sqrt(1.0 - p),
                                       testsupport::uniform(rng, 0.0, 2.0 * M_PI));
        state.epsilon_cm1 = testsupport::uniform(rng, 0.0, 500.0);
        const double temperature = testsupport::uniform(rng, 0.0, 400.0);
        const double t = testsupport::log_uniform(rng, 1e-3, 20.0);
        const auto point = dyn::density_matrix(state, j, temperature, t, loose);
        if (std::abs(point.rho11 + point.rho22 - 1.0) > 1e-12) ++failures;
        const double initial = std::abs(std::conj(state.amp_ground) * state.amp_excited);
        if (std::abs(point.rho12) > initial * (1.0 + 1e-12)) ++failures;
    }

    const double elapsed = seconds_since(t0);
    out.require(cases == 10000, std::to_string(cases) + " cases run");
    out.require(failures == 0, std::to_string(failures) + " property failures");
    out.require(elapsed < 60.0, "runtime " + num(elapsed) + " s < 60 s");
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "reaction-field solver equivalence", criterion1},
        {2, "large-protein limit and cubic solvent residual", criterion2},
        {3, "thin bound-water layer limit and linear scaling", criterion3},
        {4, "reorganization energy quadrature vs closed form", criterion4},
        {5, "decoherence regime laws (single Lorentzian)", criterion5},
        {6, "correlation-function quadrature round trip", criterion6},
        {7, "order-of-magnitude component couplings", criterion7},
        {8, "reference-table pipeline and fit round trip", criterion8},
        {9, "crossover frequency: analytic vs numeric", criterion9},
        {10, "randomized property suite", criterion10},
    };
    return all;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        }
    }

    int failed = 0;
    for (const auto& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        Outcome result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail += std::string("; unexpected exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s -- %s\n", result.pass ? "PASS" : "FAIL", c.id,
                    c.name, result.detail.c_str());
        if (!result.pass) ++failed;
    }
    return failed;
}
