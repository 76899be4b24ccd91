#include "solvspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace solvspec::quadrature {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae and weights
// on [-1, 1]; symmetric, only non-negative nodes stored).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// 7-point Gauss weights, matching kXgk indices 1, 3, 5, 7.
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
    double lo, hi, value, err;
    bool operator<(const Segment& other) const { return err < other.err; }
};

Segment gk15(const Integrand& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);

    double kron = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kron *= h;
    gauss *= h;
    return {lo, hi, kron, std::abs(kron - gauss)};
}

} // namespace

double gauss_kronrod_15(const Integrand& f, double lo, double hi, double* abs_err) {
    const auto r = gk15(f, lo, hi);
    if (abs_err) *abs_err = r.err;
    return r.value;
}

// Globally adaptive: repeatedly bisect the segment with the largest error
// estimate until the accumulated error meets the tolerance.
double integrate(const Integrand& f, double lo, double hi, const Options& opts) {
    if (lo == hi) return 0.0;

    std::priority_queue<Segment> segments;
    Segment first = gk15(f, lo, hi);
    double total = first.value;
    double total_err = first.err;
    segments.push(first);

    const std::size_t max_segments =
        std::size_t(1) << std::min(opts.max_depth, 16);  // bisections, not depth
    while (segments.size() < max_segments) {
        const double tol =
            std::max(opts.abs_tol, opts.rel_tol * std::max(std::abs(total), 1e-300));
        if (total_err <= tol) break;
        Segment worst = segments.top();
        if (worst.err <= 1e-3 * tol / double(segments.size() + 1)) break;
        segments.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Interval at floating-point resolution; nothing left to split.
            segments.push({worst.lo, worst.hi, worst.value, 0.0});
            total_err -= worst.err;
            continue;
        }
        const Segment left = gk15(f, worst.lo, mid);
        const Segment right = gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        segments.push(left);
        segments.push(right);
    }
    return total;
}

double integrate_to_infinity(const Integrand& f, double lo, double scale,
                             const Options& opts) {
    if (!(scale > 0.0)) throw NumericError("integrate_to_infinity requires a positive scale");
    double total = integrate(f, lo, lo + scale, opts);
    double a = lo + scale;
    double width = scale;
    double prev = std::numeric_limits<double>::infinity();
    // 120 doublings cover 2^120 * scale; any integrable tail has octave
    // contributions decaying well before that, while log-divergent tails
    // contribute a constant amount per octave forever.
    for (int octave = 0; octave < 120; ++octave) {
        const double piece = integrate(f, a, a + width, opts);
        total += piece;
        if (!std::isfinite(total)) {
            throw NumericError(
                "semi-infinite integral diverges: running total overflowed near omega = " +
                std::to_string(a));
        }
        const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
        if (std::abs(piece) <= 0.25 * tol && std::abs(prev) <= 0.25 * tol) return total;
        prev = piece;
        a += width;
        width *= 2.0;
    }
    throw NumericError(
        "semi-infinite integral does not converge: octave contributions have not decayed "
        "after 120 doublings (non-decaying tail)");
}

namespace {

enum class Trig { cos, sin };

struct Stencil {
    double g0, g1, g2;  // envelope and its first two derivatives at the point
};

// 5-point central differences for the envelope derivatives used by the
// integration-by-parts tail estimate.
Stencil envelope_derivatives(const Integrand& f, double w, double h) {
    const double m2 = f(w - 2 * h), m1 = f(w - h), p0 = f(w), p1 = f(w + h),
                 p2 = f(w + 2 * h);
    Stencil s;
    s.g0 = p0;
    s.g1 = (m2 - 8 * m1 + 8 * p1 - p2) / (12 * h);
    s.g2 = (-m2 + 16 * m1 - 30 * p0 + 16 * p1 - p2) / (12 * h * h);
    return s;
}

double fourier_impl(const Integrand& f, double t, double lo, double hi, Trig trig,
                    const Options& opts) {
    if (!(t > 0.0)) throw NumericError("fourier transform requires t > 0");
    if (hi <= lo) return 0.0;

    auto integrand = [&](double w) {
        return f(w) * (trig == Trig::cos ? std::cos(w * t) : std::sin(w * t));
    };

    const double half_period = M_PI / t;
    // Few oscillations over the whole domain: plain adaptive is enough.
    if (std::isfinite(hi) && (hi - lo) < 8.0 * half_period) {
        return integrate(integrand, lo, hi, opts);
    }

    // Start panels at the first half-period boundary past lo.
    std::size_t k = static_cast<std::size_t>(std::ceil(lo / half_period));
    if (k * half_period <= lo * (1.0 + 1e-14)) ++k;
    double total = integrate(integrand, lo, k * half_period, opts);

    constexpr std::size_t kMinPanels = 50;
    constexpr std::size_t kMaxPanels = 500000;
    Options panel_opts = opts;
    for (std::size_t n = 0; n < kMaxPanels; ++n, ++k) {
        const double a = k * half_period;
        const double b = (k + 1) * half_period;
        if (std::isfinite(hi) && a >= hi) return total;
        const double top = std::isfinite(hi) ? std::min(b, hi) : b;

        const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
        Segment panel = gk15(integrand, a, top);
        if (panel.err > 0.01 * std::max(tol, 1e-300)) {
            panel_opts.abs_tol = 0.01 * tol;
            panel_opts.rel_tol = opts.rel_tol;
            panel.value = integrate(integrand, a, top, panel_opts);
        }
        total += panel.value;

        // Integration by parts about the boundary w = b, where sin(bt) = 0
        // and cos(bt) = sigma:
        //   cos kernel: tail = -g'(b) sigma / t^2 + O(g'''/t^4)
        //   sin kernel: tail =  g(b)  sigma / t   - g''(b) sigma / t^3 + ...
        // Stop once the first neglected term is inside tolerance.
        if (n + 1 >= kMinPanels && (!std::isfinite(hi) || b < hi)) {
            const auto s = envelope_derivatives(f, b, 0.25 * half_period);
            const double sigma = ((k + 1) % 2 == 0) ? 1.0 : -1.0;
            if (trig == Trig::cos) {
                if (std::abs(s.g1) / (t * t) < 0.25 * tol) {
                    total += -s.g1 * sigma / (t * t);
                    return total;
                }
            } else {
                if (std::abs(s.g2) / (t * t * t) < 0.25 * tol &&
                    std::abs(s.g0) / t < 1e6 * tol) {
                    total += s.g0 * sigma / t - s.g2 * sigma / (t * t * t);
                    return total;
                }
            }
        }
    }
    throw NumericError("oscillatory integral failed to settle within the panel limit");
}

} // namespace

double fourier_cos(const Integrand& f, double t, double lo, double hi, const Options& opts) {
    return fourier_impl(f, t, lo, hi, Trig::cos, opts);
}

double fourier_sin(const Integrand& f, double t, double lo, double hi, const Options& opts) {
    return fourier_impl(f, t, lo, hi, Trig::sin, opts);
}

} // namespace solvspec::quadrature
