#include "solvspec/spectral_density.hpp"

#include <algorithm>
#include <cmath>

#include "solvspec/units.hpp"

namespace solvspec {

std::string component_name(ComponentLabel label) {
    switch (label) {
        case ComponentLabel::unlabeled:   return "unlabeled";
        case ComponentLabel::protein:     return "protein";
        case ComponentLabel::bound_water: return "bound";
        case ComponentLabel::solvent:     return "solvent";
    }
    return "?";
}

void LorentzianSum::validate() const {
    for (const auto& t : terms) {
        if (!(t.alpha >= 0.0)) {
            throw ValidationError("Lorentzian coupling alpha must be >= 0, got " +
                                  std::to_string(t.alpha));
        }
        if (!(t.tau_ps > 0.0)) {
            throw ValidationError("Lorentzian relaxation time must be > 0, got " +
                                  std::to_string(t.tau_ps) + " ps");
        }
    }
}

double LorentzianSum::reorganization_energy_cm1() const {
    double er = 0.0;
    for (const auto& t : terms) er += M_PI * t.alpha * units::hbar_cm1_ps / (2.0 * t.tau_ps);
    return er;
}

const LorentzianTerm* LorentzianSum::find(ComponentLabel label) const {
    for (const auto& t : terms)
        if (t.label == label) return &t;
    return nullptr;
}

double LorentzianSum::fastest_rate() const {
    double r = 0.0;
    for (const auto& t : terms) r = std::max(r, 1.0 / t.tau_ps);
    return r;
}

double eval_lorentzian(const LorentzianSum& sum, double omega_rad_ps) {
    if (omega_rad_ps < 0.0) {
        throw UnitError("spectral density requires omega >= 0");
    }
    double j = 0.0;
    for (const auto& t : sum.terms) {
        const double x = omega_rad_ps * t.tau_ps;
        j += t.alpha * omega_rad_ps / (1.0 + x * x);
    }
    return j;
}

void TabulatedDensity::validate() const {
    if (points.size() < 2) throw ValidationError("tabulated spectral density needs >= 2 points");
    double prev = -1.0;
    for (const auto& [w, j] : points) {
        if (w < 0.0) throw ValidationError("tabulated omega must be >= 0");
        if (w <= prev) throw ValidationError("tabulated omega grid must be strictly increasing");
        if (j < 0.0) throw ValidationError("tabulated J values must be >= 0");
        prev = w;
    }
}

double TabulatedDensity::operator()(double omega_rad_ps) const {
    if (omega_rad_ps < 0.0) throw UnitError("spectral density requires omega >= 0");
    if (points.empty()) return 0.0;
    if (omega_rad_ps <= points.front().first) {
        // Ohmic continuation through the origin below the first grid point.
        return points.front().first > 0.0
                   ? points.front().second * omega_rad_ps / points.front().first
                   : points.front().second;
    }
    if (omega_rad_ps >= points.back().first) return 0.0;
    auto it = std::lower_bound(points.begin(), points.end(), omega_rad_ps,
                               [](const auto& p, double w) { return p.first < w; });
    const auto [w1, j1] = *it;
    const auto [w0, j0] = *(it - 1);
    const double s = (omega_rad_ps - w0) / (w1 - w0);
    return j0 + s * (j1 - j0);
}

SpectralDensity SpectralDensity::from_lorentzians(LorentzianSum sum) {
    sum.validate();
    SpectralDensity d;
    d.fastest_rate_ = std::max(sum.fastest_rate(), 1e-300);
    d.backing_ = std::move(sum);
    return d;
}

SpectralDensity SpectralDensity::from_function(std::function<double(double)> j,
                                               double fastest_rate_hint) {
    if (!(fastest_rate_hint > 0.0)) {
        throw ValidationError("fastest_rate_hint must be positive");
    }
    SpectralDensity d;
    d.backing_ = std::move(j);
    d.fastest_rate_ = fastest_rate_hint;
    return d;
}

SpectralDensity SpectralDensity::from_table(TabulatedDensity table) {
    table.validate();
    SpectralDensity d;
    d.fastest_rate_ = table.points.back().first;
    d.backing_ = std::move(table);
    return d;
}

double SpectralDensity::operator()(double omega_rad_ps) const {
    if (omega_rad_ps < 0.0) throw UnitError("spectral density requires omega >= 0");
    if (const auto* sum = std::get_if<LorentzianSum>(&backing_)) {
        return eval_lorentzian(*sum, omega_rad_ps);
    }
    if (const auto* fn = std::get_if<std::function<double(double)>>(&backing_)) {
        return (*fn)(omega_rad_ps);
    }
    return std::get<TabulatedDensity>(backing_)(omega_rad_ps);
}

const LorentzianSum* SpectralDensity::lorentzians() const {
    return std::get_if<LorentzianSum>(&backing_);
}

} // namespace solvspec
