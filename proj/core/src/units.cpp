#include "solvspec/units.hpp"

namespace solvspec::units {

Dimension dimension_of(Unit u) {
    switch (u) {
        case Unit::wavenumber_cm1:
        case Unit::milli_ev:
        case Unit::joule:
            return Dimension::energy;
        case Unit::picosecond:
        case Unit::femtosecond:
        case Unit::nanosecond:
            return Dimension::time;
        case Unit::rad_per_ps:
            return Dimension::angular_frequency;
        case Unit::angstrom:
            return Dimension::length;
        case Unit::debye:
            return Dimension::dipole;
        case Unit::kelvin:
            return Dimension::temperature;
    }
    throw UnitError("unknown unit tag");
}

std::string unit_name(Unit u) {
    switch (u) {
        case Unit::wavenumber_cm1: return "cm^-1";
        case Unit::milli_ev:       return "meV";
        case Unit::joule:          return "J";
        case Unit::picosecond:     return "ps";
        case Unit::femtosecond:    return "fs";
        case Unit::nanosecond:     return "ns";
        case Unit::rad_per_ps:     return "rad/ps";
        case Unit::angstrom:       return "Angstrom";
        case Unit::debye:          return "D";
        case Unit::kelvin:         return "K";
    }
    return "?";
}

namespace {

// Factor taking one unit of `u` to the canonical unit of its dimension
// (cm^-1, ps, rad/ps, Angstrom, Debye, K).
double to_canonical_factor(Unit u) {
    switch (u) {
        case Unit::wavenumber_cm1: return 1.0;
        case Unit::milli_ev:       return mev_to_cm1;
        case Unit::joule:          return 1.0 / hc_joule_cm;
        case Unit::picosecond:     return 1.0;
        case Unit::femtosecond:    return 1e-3;
        case Unit::nanosecond:     return 1e3;
        case Unit::rad_per_ps:     return 1.0;
        case Unit::angstrom:       return 1.0;
        case Unit::debye:          return 1.0;
        case Unit::kelvin:         return 1.0;
    }
    throw UnitError("unknown unit tag");
}

} // namespace

Quantity convert(const Quantity& q, Unit target) {
    if (dimension_of(q.unit) != dimension_of(target)) {
        throw UnitError("cannot convert " + unit_name(q.unit) + " to " + unit_name(target) +
                        ": incompatible dimensions");
    }
    if (q.unit == target) return q;
    const double canonical = q.value * to_canonical_factor(q.unit);
    return {canonical / to_canonical_factor(target), target};
}

Quantity thermal_energy(double temperature_kelvin) {
    if (temperature_kelvin < 0.0) {
        throw UnitError("temperature must be non-negative, got " +
                        std::to_string(temperature_kelvin) + " K");
    }
    return {k_boltzmann_cm1_per_kelvin * temperature_kelvin, Unit::wavenumber_cm1};
}

} // namespace solvspec::units
