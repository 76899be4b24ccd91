#include "solvspec/dielectric.hpp"

#include <string>

namespace solvspec {

void DebyeDielectric::validate() const {
    if (!(eps_static >= eps_inf)) {
        throw ValidationError("Debye dielectric requires eps_static >= eps_inf, got " +
                              std::to_string(eps_static) + " < " + std::to_string(eps_inf));
    }
    if (!(eps_inf >= 1.0)) {
        throw ValidationError("Debye dielectric requires eps_inf >= 1, got " +
                              std::to_string(eps_inf));
    }
    if (!(tau_debye_ps > 0.0)) {
        throw ValidationError("Debye relaxation time must be positive, got " +
                              std::to_string(tau_debye_ps) + " ps");
    }
}

void StaticDielectric::validate() const {
    if (!(eps >= 1.0)) {
        throw ValidationError("static dielectric constant must be >= 1, got " +
                              std::to_string(eps));
    }
}

namespace {
void check_omega(double omega) {
    if (omega < 0.0) {
        throw UnitError("permittivity requires omega >= 0, got " + std::to_string(omega));
    }
}
} // namespace

std::complex<double> permittivity(const DebyeDielectric& d, double omega_rad_ps) {
    check_omega(omega_rad_ps);
    const std::complex<double> den(1.0, -omega_rad_ps * d.tau_debye_ps);
    return d.eps_inf + (d.eps_static - d.eps_inf) / den;
}

std::complex<double> permittivity(const StaticDielectric& d, double omega_rad_ps) {
    check_omega(omega_rad_ps);
    return {d.eps, 0.0};
}

std::complex<double> permittivity(const Dielectric& d, double omega_rad_ps) {
    return std::visit([omega_rad_ps](const auto& m) { return permittivity(m, omega_rad_ps); }, d);
}

void validate(const Dielectric& d) {
    std::visit([](const auto& m) { m.validate(); }, d);
}

double relaxation_time_ps(const Dielectric& d) {
    if (const auto* dd = std::get_if<DebyeDielectric>(&d)) return dd->tau_debye_ps;
    return 0.0;
}

} // namespace solvspec
