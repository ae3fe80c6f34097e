#pragma once
#include <cstdint>
#include <string>

#include "paramd/system.hpp"

namespace paramd {

enum class ChargeScheme {
    AllPlusOne,
    Alternating,    // +1, -1, +1, ... by index
    RandomNeutral,  // half +1, half -1, randomly assigned
};

ChargeScheme charge_scheme_from_string(const std::string& name);
std::string to_string(ChargeScheme scheme);

/**
 * Rejection-samples n particle positions inside the box with pairwise
 * distances >= min_separation. Deterministic for a fixed seed. Velocities
 * are zero, masses 1 amu. The attempt budget is 10000*n draws; exhausting
 * it raises PlacementError.
 */
ParticleSystem generate_random_system(std::size_t n, const Vec3& box, ChargeScheme scheme,
                                      double min_separation, std::uint64_t seed);

}  // namespace paramd
