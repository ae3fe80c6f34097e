#include "paramd/system.hpp"

#include <cmath>
#include <string>

#include "paramd/errors.hpp"

namespace paramd {

void validate_system(const ParticleSystem& s, bool require_in_box) {
    const std::size_t n = s.positions.size();
    if (n == 0) throw ConfigError("system must contain at least one particle");
    if (s.velocities.size() != n || s.charges.size() != n || s.masses.size() != n)
        throw ConfigError("system field lengths differ: positions=" + std::to_string(n) +
                          " velocities=" + std::to_string(s.velocities.size()) +
                          " charges=" + std::to_string(s.charges.size()) +
                          " masses=" + std::to_string(s.masses.size()));
    if (!(s.box.x > 0.0 && s.box.y > 0.0 && s.box.z > 0.0))
        throw ConfigError("box extents must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        if (!finite(s.positions[i]) || !finite(s.velocities[i]) ||
            !std::isfinite(s.charges[i]) || !std::isfinite(s.masses[i]))
            throw ConfigError("non-finite value at particle " + std::to_string(i));
        if (!(s.masses[i] > 0.0))
            throw ConfigError("non-positive mass at particle " + std::to_string(i));
        if (require_in_box) {
            const Vec3& p = s.positions[i];
            if (p.x < 0.0 || p.x > s.box.x || p.y < 0.0 || p.y > s.box.y || p.z < 0.0 ||
                p.z > s.box.z)
                throw ConfigError("particle " + std::to_string(i) + " outside the box");
        }
    }
}

double total_charge(const ParticleSystem& s) {
    double q = 0.0;
    for (double qi : s.charges) q += qi;
    return q;
}

Vec3 center_of_mass(const ParticleSystem& s) {
    Vec3 num{};
    double m = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        num += s.positions[i] * s.masses[i];
        m += s.masses[i];
    }
    return num / m;
}

double kinetic_energy(const ParticleSystem& s) {
    double ke = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) ke += 0.5 * s.masses[i] * norm2(s.velocities[i]);
    return ke;
}

}  // namespace paramd
