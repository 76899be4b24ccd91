// units.hpp — pinned physical constants and the small unit system used
// throughout the library.
//
// Internal canonical units: energy in cm^-1, time in ps, angular frequency in
// rad/ps, length in Angstrom, dipole moment in Debye, temperature in K.
// Spectral densities J(omega) carry rad/ps; energy prefactors are divided by
// hbar once so that dimensionless couplings fall out of J(omega) = alpha*omega
// directly.
#pragma once

#include <string>

#include "solvspec/errors.hpp"

namespace solvspec::units {

// ---------------------------------------------------------------------------
// Source-of-truth constants table.  Tests reference these exact values;
// change them only together with the constants_table_version in version.hpp.
// ---------------------------------------------------------------------------

// hbar in cm^-1 * ps.
inline constexpr double hbar_cm1_ps = 5.3088;

// Boltzmann constant in cm^-1 / K.
inline constexpr double k_boltzmann_cm1_per_kelvin = 0.69504;

// 1 Debye in C*m.
inline constexpr double debye_si = 3.33564e-30;

// Vacuum permittivity in F/m.
inline constexpr double epsilon0_si = 8.8542e-12;

// h*c in J*cm: converts energies between joule and cm^-1.
inline constexpr double hc_joule_cm = 1.9864459e-23;

// Elementary charge in C: converts energies between eV-family units and J.
inline constexpr double elementary_charge_si = 1.602176634e-19;

// Derived: (1 Debye)^2 / (4 pi eps0 Angstrom^3) expressed in cm^-1.  This is
// the natural energy scale of a point dipole in an Angstrom-sized cavity and
// the only place electromagnetic SI units enter the library.
inline constexpr double dipole_energy_cm1 =
    debye_si * debye_si /
    (4.0 * 3.14159265358979323846 * epsilon0_si * 1e-30) / hc_joule_cm;

// 1 meV in cm^-1.
inline constexpr double mev_to_cm1 = 1e-3 * elementary_charge_si / hc_joule_cm;

// ---------------------------------------------------------------------------
// Tagged quantities
// ---------------------------------------------------------------------------

enum class Unit {
    wavenumber_cm1,  // energy
    milli_ev,        // energy
    joule,           // energy
    picosecond,      // time
    femtosecond,     // time
    nanosecond,      // time
    rad_per_ps,      // angular frequency
    angstrom,        // length
    debye,           // dipole moment
    kelvin,          // temperature
};

enum class Dimension { energy, time, angular_frequency, length, dipole, temperature };

Dimension dimension_of(Unit u);
std::string unit_name(Unit u);

struct Quantity {
    double value = 0.0;
    Unit unit = Unit::wavenumber_cm1;
};

// Exact linear conversion between units of the same dimension.  Throws
// UnitError naming both units when the dimensions differ.
Quantity convert(const Quantity& q, Unit target);

// k_B * T in cm^-1.  T = 0 returns 0 (callers treat coth -> 1 there).
// Negative temperatures are rejected.
Quantity thermal_energy(double temperature_kelvin);

} // namespace solvspec::units
