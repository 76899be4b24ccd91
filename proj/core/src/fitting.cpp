#include "solvspec/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <random>
#include <sstream>

#include "solvspec/units.hpp"

namespace solvspec::fitting {

void CorrelationSamples::validate() const {
    if (points.empty()) throw ValidationError("correlation data is empty");
    if (points.front().t_ps < 0.0) {
        throw ValidationError("correlation data must start at t >= 0");
    }
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
        if (!(p.t_ps > prev)) {
            throw ValidationError("correlation time grid must be strictly increasing");
        }
        if (!std::isfinite(p.c)) throw ValidationError("non-finite correlation value");
        if (p.sigma && !(*p.sigma > 0.0)) {
            throw ValidationError("sigma weights must be positive");
        }
        prev = p.t_ps;
    }
}

CorrelationSamples parse_correlation(std::istream& in) {
    CorrelationSamples out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (auto& ch : line) {
            if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
        }
        std::istringstream row(line);
        double t, c;
        if (!(row >> t)) continue;  // blank line
        if (!(row >> c)) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected at least two columns (t_ps, C)");
        }
        CorrelationPoint p{t, c, std::nullopt};
        double sigma;
        if (row >> sigma) p.sigma = sigma;
        std::string trailing;
        if (row >> trailing) {
            throw ParseError("line " + std::to_string(lineno) + ": unexpected extra column '" +
                             trailing + "'");
        }
        out.points.push_back(p);
    }
    out.validate();
    return out;
}

CorrelationSamples load_correlation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open correlation file: " + path);
    return parse_correlation(in);
}

namespace {

// Model parameters: theta = (u_1..u_n, v_1..v_{n-1}) with tau_j = exp(u_j)
// and weights A_j = softmax(v_1..v_{n-1}, 0).  Weight normalisation is exact
// by construction.
struct Params {
    std::vector<double> u;  // log tau
    std::vector<double> v;  // softmax logits, last pinned to 0
};

std::vector<double> weights(const Params& p) {
    const std::size_t n = p.u.size();
    std::vector<double> w(n);
    double zmax = 0.0;
    for (double v : p.v) zmax = std::max(zmax, v);
    double norm = std::exp(0.0 - zmax);
    for (std::size_t j = 0; j + 1 < n; ++j) norm += std::exp(p.v[j] - zmax);
    for (std::size_t j = 0; j < n; ++j) {
        const double z = (j + 1 < n) ? p.v[j] : 0.0;
        w[j] = std::exp(z - zmax) / norm;
    }
    return w;
}

struct Design {
    std::vector<double> t, c, wgt;
};

double sum_squares(const Design& d, const Params& p) {
    const auto A = weights(p);
    double ss = 0.0;
    for (std::size_t i = 0; i < d.t.size(); ++i) {
        double model = 0.0;
        for (std::size_t j = 0; j < A.size(); ++j) {
            model += A[j] * std::exp(-d.t[i] * std::exp(-p.u[j]));
        }
        const double r = d.wgt[i] * (model - d.c[i]);
        ss += r * r;
    }
    return ss;
}

// Solves (JtJ + lambda diag(JtJ)) dx = -Jtr in place; returns false when the
// system is numerically singular.
bool solve_damped(std::vector<double> a, std::vector<double> rhs, double lambda,
                  std::vector<double>& dx) {
    const std::size_t n = rhs.size();
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] *= (1.0 + lambda);
        a[i * n + i] += 1e-300;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        }
        if (std::abs(a[piv * n + col]) < 1e-280) return false;
        if (piv != col) {
            for (std::size_t c2 = 0; c2 < n; ++c2) std::swap(a[col * n + c2], a[piv * n + c2]);
            std::swap(rhs[col], rhs[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (std::size_t c2 = col; c2 < n; ++c2) a[r * n + c2] -= f * a[col * n + c2];
            rhs[r] -= f * rhs[col];
        }
    }
    dx.assign(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double acc = rhs[ri];
        for (std::size_t c2 = ri + 1; c2 < n; ++c2) acc -= a[ri * n + c2] * dx[c2];
        dx[ri] = acc / a[ri * n + ri];
    }
    return true;
}

struct LocalFit {
    Params p;
    double ss = std::numeric_limits<double>::infinity();
    bool converged = false;
};

LocalFit gauss_newton(const Design& d, Params p, const FitOptions& opts, double u_cap) {
    const std::size_t n = p.u.size();
    const std::size_t np = n + (n - 1);
    const std::size_t m = d.t.size();

    double lambda = 1e-3;
    double ss = sum_squares(d, p);
    bool converged = false;

    std::vector<double> jtj(np * np), jtr(np), dx;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        const auto A = weights(p);
        std::fill(jtj.begin(), jtj.end(), 0.0);
        std::fill(jtr.begin(), jtr.end(), 0.0);
        std::vector<double> grad_row(np);
        for (std::size_t i = 0; i < m; ++i) {
            double model = 0.0;
            std::vector<double> e(n);
            for (std::size_t j = 0; j < n; ++j) {
                e[j] = std::exp(-d.t[i] * std::exp(-p.u[j]));
                model += A[j] * e[j];
            }
            const double r = d.wgt[i] * (model - d.c[i]);
            for (std::size_t j = 0; j < n; ++j) {
                // d model / d u_j  (tau_j = e^{u_j})
                const double tau = std::exp(p.u[j]);
                grad_row[j] = d.wgt[i] * A[j] * e[j] * d.t[i] / tau;
                // d model / d v_j (softmax)
                if (j + 1 < n) grad_row[n + j] = d.wgt[i] * A[j] * (e[j] - model);
            }
            for (std::size_t a2 = 0; a2 < np; ++a2) {
                jtr[a2] += grad_row[a2] * r;
                for (std::size_t b2 = 0; b2 < np; ++b2) {
                    jtj[a2 * np + b2] += grad_row[a2] * grad_row[b2];
                }
            }
        }

        double gnorm = 0.0;
        for (double g : jtr) gnorm = std::max(gnorm, std::abs(g));
        if (gnorm < opts.gradient_tol) {
            converged = true;
            break;
        }

        bool stepped = false;
        for (int tries = 0; tries < 24; ++tries) {
            std::vector<double> rhs(np);
            for (std::size_t a2 = 0; a2 < np; ++a2) rhs[a2] = -jtr[a2];
            if (!solve_damped(jtj, rhs, lambda, dx)) {
                lambda *= 11.0;
                continue;
            }
            Params trial = p;
            for (std::size_t j = 0; j < n; ++j) {
                trial.u[j] = std::min(p.u[j] + dx[j], u_cap);
            }
            for (std::size_t j = 0; j + 1 < n; ++j) {
                trial.v[j] = std::clamp(p.v[j] + dx[n + j], -60.0, 60.0);
            }
            const double trial_ss = sum_squares(d, trial);
            if (trial_ss <= ss) {
                const double improvement = ss - trial_ss;
                p = trial;
                ss = trial_ss;
                lambda = std::max(lambda / 9.0, 1e-14);
                stepped = true;
                if (improvement < 1e-16 * (1.0 + ss) && gnorm < 1e3 * opts.gradient_tol) {
                    converged = true;
                }
                break;
            }
            lambda *= 11.0;
        }
        if (converged) break;
        if (!stepped) break;  // stuck: no downhill step at any damping
    }
    return {std::move(p), ss, converged};
}

} // namespace

ExponentialFit fit_multiexponential(const CorrelationSamples& data, int n_components,
                                    const FitOptions& opts) {
    data.validate();
    if (n_components < 1 || n_components > 4) {
        throw ValidationError("component count must be between 1 and 4");
    }
    const std::size_t n = static_cast<std::size_t>(n_components);
    if (data.points.size() < 2 * n + 1) {
        throw ValidationError("need at least 2n+1 data points for an n-component fit");
    }

    Design d;
    for (const auto& p : data.points) {
        d.t.push_back(p.t_ps);
        d.c.push_back(p.c);
        d.wgt.push_back(p.sigma ? 1.0 / *p.sigma : 1.0);
    }

    // Seed relaxation times span the sampled window.
    double t_min = 0.0;
    for (double t : d.t) {
        if (t > 0.0) {
            t_min = t;
            break;
        }
    }
    const double t_max = d.t.back();
    if (!(t_max > 0.0)) throw ValidationError("correlation data has no positive times");
    if (!(t_min > 0.0)) t_min = t_max * 1e-3;
    const double lo = std::log(0.3 * t_min), hi = std::log(3.0 * t_max);
    const double u_cap = std::log(1e6 * t_max);

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);

    const int starts = std::max(opts.starts, 8);
    LocalFit best;
    for (int s = 0; s < starts; ++s) {
        Params p;
        p.u.resize(n);
        p.v.assign(n - 1, 0.0);
        // Offset the ladder of seeds so the starts tile the time range.
        const double shift = (starts > 1) ? double(s) / double(starts) : 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double frac =
                n == 1 ? shift : (double(j) + shift) / double(n);
            p.u[j] = lo + frac * (hi - lo) + (s > 0 ? jitter(rng) : 0.0);
        }
        LocalFit fit = gauss_newton(d, p, opts, u_cap);
        const bool better = fit.ss < best.ss * (1.0 - 1e-12) ||
                            (fit.converged && !best.converged &&
                             fit.ss <= best.ss * (1.0 + 1e-9));
        if (better) best = std::move(fit);
    }

    ExponentialFit out;
    const auto A = weights(best.p);
    for (std::size_t j = 0; j < n; ++j) {
        out.components.push_back({A[j], std::exp(best.p.u[j])});
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const FitComponent& a, const FitComponent& b) { return a.tau_ps < b.tau_ps; });
    out.residual_rms = std::sqrt(best.ss / double(d.t.size()));
    out.converged = best.converged;
    for (std::size_t j = 0; j + 1 < out.components.size(); ++j) {
        const double r = out.components[j + 1].tau_ps / out.components[j].tau_ps;
        if (r < 1.01) out.degenerate_taus = true;
    }
    // Relaxation times escaping far beyond the sampled window mean the data
    // cannot pin them down (constant data, too many components).
    for (const auto& cpt : out.components) {
        if (cpt.tau_ps > 1e2 * t_max) out.converged = false;
    }
    return out;
}

std::vector<double> couplings_from_fit(double reorganization_energy_cm1,
                                       const ExponentialFit& fit) {
    if (!(reorganization_energy_cm1 > 0.0)) {
        throw ValidationError("reorganization energy must be positive");
    }
    std::vector<double> alphas;
    alphas.reserve(fit.components.size());
    for (const auto& c : fit.components) {
        alphas.push_back(2.0 * reorganization_energy_cm1 * c.weight * c.tau_ps /
                         (M_PI * units::hbar_cm1_ps));
    }
    return alphas;
}

LorentzianSum lorentzian_from_fit(double reorganization_energy_cm1,
                                  const ExponentialFit& fit) {
    const auto alphas = couplings_from_fit(reorganization_energy_cm1, fit);
    LorentzianSum sum;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        sum.terms.push_back({alphas[j], fit.components[j].tau_ps, ComponentLabel::unlabeled});
    }
    sum.validate();
    return sum;
}

} // namespace solvspec::fitting
