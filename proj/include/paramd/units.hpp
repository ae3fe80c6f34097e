#pragma once
#include "paramd/errors.hpp"

namespace paramd {

/**
 * Unit conventions: positions in Angstrom, time in fs, mass in amu,
 * charge in units of e. Energies are whatever unit coulomb_constant
 * implies; energy_to_native converts one such energy unit into the
 * native amu*A^2/fs^2 used by the integrator and kinetic_energy().
 *
 * physical(): kcal/mol energies, k_C = 332.0636 kcal*A/(mol*e^2),
 *             1 kcal/mol = 4.184e-4 amu*A^2/fs^2.
 * reduced():  k_C = 1, conversion 1; analytic tests use a = F/m directly.
 */
struct UnitsConfig {
    double coulomb_constant = 332.0636;
    double energy_to_native = 4.184e-4;

    static constexpr UnitsConfig physical() { return {332.0636, 4.184e-4}; }
    static constexpr UnitsConfig reduced() { return {1.0, 1.0}; }

    void validate() const {
        if (!(coulomb_constant > 0.0)) throw ConfigError("coulomb_constant must be > 0");
        if (!(energy_to_native > 0.0)) throw ConfigError("energy_to_native must be > 0");
    }
};

}  // namespace paramd
