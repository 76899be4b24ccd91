#include "solvspec/reaction_field.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "solvspec/units.hpp"

namespace solvspec {

using cplx = std::complex<double>;

void ThreeRegionGeometry::validate() const {
    if (!(cavity_radius_a > 0.0) || !(shell_radius_b > cavity_radius_a)) {
        throw ValidationError("geometry requires 0 < a < b, got a = " +
                              std::to_string(cavity_radius_a) + ", b = " +
                              std::to_string(shell_radius_b));
    }
    solvspec::validate(eps_cavity);
    solvspec::validate(eps_shell);
    solvspec::validate(eps_bulk);
}

void DipoleSource::validate() const {
    if (!(delta_mu_debye >= 0.0)) {
        throw ValidationError("dipole moment change must be >= 0, got " +
                              std::to_string(delta_mu_debye) + " D");
    }
}

std::complex<double> chi_closed_form(const ThreeRegionGeometry& g, double omega_rad_ps) {
    const cplx ec = permittivity(g.eps_cavity, omega_rad_ps);
    const cplx ep = permittivity(g.eps_shell, omega_rad_ps);
    const cplx ee = permittivity(g.eps_bulk, omega_rad_ps);
    const double a3 = std::pow(g.cavity_radius_a, 3);
    const double b3 = std::pow(g.shell_radius_b, 3);

    const cplx num = (ep + 2.0 * ec) * (ee - ep) * a3 + (ep - ec) * (2.0 * ee + ep) * b3;
    const cplx den = 2.0 * (ep - ec) * (ee - ep) * a3 + (2.0 * ep + ec) * (2.0 * ee + ep) * b3;
    const cplx leading = (2.0 * ep + ec) * (2.0 * ee + ep) * b3;
    if (std::abs(den) < 1e-14 * std::abs(leading)) {
        throw NumericError("singular dielectric configuration at omega = " +
                           std::to_string(omega_rad_ps) + " rad/ps");
    }
    return (2.0 / a3) * num / den;
}

namespace {

// Gaussian elimination with partial pivoting on an n x n complex system.
// Returns the solution and writes a crude condition estimate (ratio of the
// largest to the smallest pivot magnitude).
template <int N>
std::array<cplx, N> solve_pivoted(std::array<std::array<cplx, N>, N> m,
                                  std::array<cplx, N> rhs, double* pivot_ratio) {
    double max_piv = 0.0;
    double min_piv = std::numeric_limits<double>::infinity();
    for (int col = 0; col < N; ++col) {
        int pivot = col;
        for (int r = col + 1; r < N; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        }
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        const double piv_mag = std::abs(m[col][col]);
        max_piv = std::max(max_piv, piv_mag);
        min_piv = std::min(min_piv, piv_mag);
        if (piv_mag == 0.0) {
            if (pivot_ratio) *pivot_ratio = std::numeric_limits<double>::infinity();
            throw NumericError("singular boundary-condition system (zero pivot)");
        }
        for (int r = col + 1; r < N; ++r) {
            const cplx factor = m[r][col] / m[col][col];
            for (int c = col; c < N; ++c) m[r][c] -= factor * m[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    if (pivot_ratio) *pivot_ratio = max_piv / min_piv;
    std::array<cplx, N> x{};
    for (int r = N - 1; r >= 0; --r) {
        cplx acc = rhs[r];
        for (int c = r + 1; c < N; ++c) acc -= m[r][c] * x[c];
        x[r] = acc / m[r][r];
    }
    return x;
}

} // namespace

std::complex<double> chi_linear_solve(const ThreeRegionGeometry& g, double omega_rad_ps) {
    const cplx ec = permittivity(g.eps_cavity, omega_rad_ps);
    const cplx ep = permittivity(g.eps_shell, omega_rad_ps);
    const cplx ee = permittivity(g.eps_bulk, omega_rad_ps);
    const double a = g.cavity_radius_a;
    const double b = g.shell_radius_b;

    // n = 1 channel potentials with B_c = mu = 1 fixed and A_e = 0:
    //   phi_c = (A_c r + 1/r^2) cos(theta)
    //   phi_p = (A_p r + B_p/r^2) cos(theta)
    //   phi_e = (B_e/r^2) cos(theta)
    // Dimensionless unknowns x = (A_c a^3, A_p b^3, B_p, B_e) keep the matrix
    // entries O(1) uniformly in the shell thickness; s = (a/b)^3 <= 1.
    const double s = std::pow(a / b, 3);
    std::array<std::array<cplx, 4>, 4> m{};
    std::array<cplx, 4> rhs{};

    // potential continuity at r = a (scaled by a^2):
    //   A_c a^3 + 1 = A_p b^3 s + B_p
    m[0] = {cplx(1.0), cplx(-s), cplx(-1.0), cplx(0.0)};
    rhs[0] = cplx(-1.0);
    // displacement continuity at r = a (scaled by a^3):
    //   ec (A_c a^3 - 2) = ep (A_p b^3 s - 2 B_p)
    m[1] = {ec, -ep * s, ep * 2.0, cplx(0.0)};
    rhs[1] = ec * 2.0;
    // potential continuity at r = b (scaled by b^2):
    //   A_p b^3 + B_p = B_e
    m[2] = {cplx(0.0), cplx(1.0), cplx(1.0), cplx(-1.0)};
    rhs[2] = cplx(0.0);
    // displacement continuity at r = b (scaled by b^3):
    //   ep (A_p b^3 - 2 B_p) = -2 ee B_e
    m[3] = {cplx(0.0), ep, -ep * 2.0, ee * 2.0};
    rhs[3] = cplx(0.0);

    double pivot_ratio = 0.0;
    std::array<cplx, 4> x;
    try {
        x = solve_pivoted<4>(m, rhs, &pivot_ratio);
    } catch (const NumericError&) {
        throw NumericError("singular boundary-condition system at omega = " +
                           std::to_string(omega_rad_ps) +
                           " rad/ps (pivot ratio estimate " + std::to_string(pivot_ratio) + ")");
    }
    if (pivot_ratio > 1e14) {
        throw NumericError("ill-conditioned boundary-condition system at omega = " +
                           std::to_string(omega_rad_ps) + " rad/ps (pivot ratio " +
                           std::to_string(pivot_ratio) + ")");
    }
    // The surface-charge potential inside the cavity is A_c r cos(theta) =
    // -chi mu r cos(theta) with mu = 1, so chi = -A_c = -x[0]/a^3.
    return -x[0] / (a * a * a);
}

double chi_to_j_factor(const DipoleSource& src) {
    src.validate();
    return src.delta_mu_debye * src.delta_mu_debye * units::dipole_energy_cm1 /
           units::hbar_cm1_ps;
}

SpectralDensity spectral_density_from_chi(const DipoleSource& src,
                                          std::function<std::complex<double>(double)> chi,
                                          double fastest_rate_hint) {
    const double factor = chi_to_j_factor(src);
    auto j = [factor, chi = std::move(chi)](double omega) {
        return factor * chi(omega).imag();
    };
    return SpectralDensity::from_function(std::move(j), fastest_rate_hint);
}

} // namespace solvspec
