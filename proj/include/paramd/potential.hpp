#pragma once
#include <optional>
#include <vector>

#include "paramd/vec3.hpp"

namespace paramd {

/**
 * Result of one electrostatics evaluation.
 *
 * per_particle_potential stores potentials per unit charge
 * (phi_i = sum_j q_j g(r_ij)); forces carry the Coulomb prefactor.
 * total_energy = 1/2 k_C sum_i q_i phi_i, identical convention for
 * every force field. MSM additionally fills short_part/long_part with
 * the two halves of phi.
 */
struct PotentialResult {
    std::vector<double> per_particle_potential;
    std::vector<Vec3> per_particle_force;
    double total_energy = 0.0;
    std::optional<std::vector<double>> short_part;
    std::optional<std::vector<double>> long_part;
};

struct CutoffParams {
    double cutoff = 12.0;                    // a, Angstrom
    std::optional<double> wolf_alpha{};      // damping, 1/Angstrom

    void validate(bool need_alpha) const;
};

}  // namespace paramd
