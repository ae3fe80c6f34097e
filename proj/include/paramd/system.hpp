#pragma once
#include <cstddef>
#include <vector>

#include "paramd/vec3.hpp"

namespace paramd {

/// N particles in an axis-aligned box with origin at 0. All lists share length N.
struct ParticleSystem {
    std::vector<Vec3> positions;    // A
    std::vector<Vec3> velocities;   // A/fs
    std::vector<double> charges;    // e
    std::vector<double> masses;     // amu
    Vec3 box{};                     // A

    std::size_t size() const { return positions.size(); }
};

// Throws on length mismatch, non-positive mass/box, non-finite values;
// the in-box check applies to freshly constructed systems (loader, generator),
// dynamics is free to leave the box afterwards.
void validate_system(const ParticleSystem& s, bool require_in_box);

double total_charge(const ParticleSystem& s);
Vec3 center_of_mass(const ParticleSystem& s);

/// Sum of 1/2 m |v|^2 in native units (amu*A^2/fs^2), index order.
double kinetic_energy(const ParticleSystem& s);

}  // namespace paramd
