#include "paramd/integrate.hpp"

#include "paramd/errors.hpp"

namespace paramd {

void PropagatorSpec::validate() const {
    if (!force_field) throw ConfigError("propagator has no force field");
    if (!(dt > 0.0)) throw ConfigError("dt must be > 0");
    if (steps_per_slice < 1) throw ConfigError("steps_per_slice must be >= 1");
}

ParticleSystem propagate(const PropagatorSpec& spec, const ParticleSystem& s,
                         const UnitsConfig& units) {
    spec.validate();
    units.validate();
    ParticleSystem cur = s;
    const std::size_t n = cur.size();
    const double dt = spec.dt;
    const double conv = units.energy_to_native;

    PotentialResult f = spec.force_field->evaluate(cur);
    for (int step = 0; step < spec.steps_per_slice; ++step) {
        for (std::size_t i = 0; i < n; ++i) {
            const double c = 0.5 * dt * conv / cur.masses[i];
            cur.velocities[i] += f.per_particle_force[i] * c;
            cur.positions[i] += cur.velocities[i] * dt;
        }
        f = spec.force_field->evaluate(cur);
        for (std::size_t i = 0; i < n; ++i) {
            const double c = 0.5 * dt * conv / cur.masses[i];
            cur.velocities[i] += f.per_particle_force[i] * c;
        }
    }
    return cur;
}

ParticleSystem verlet_step(const ParticleSystem& s, const ForceField& ff, double dt,
                           const UnitsConfig& units) {
    PropagatorSpec spec;
    spec.force_field = std::shared_ptr<const ForceField>(&ff, [](const ForceField*) {});
    spec.dt = dt;
    spec.steps_per_slice = 1;
    return propagate(spec, s, units);
}

EnergyReport energy_report(const ParticleSystem& s, const ForceField& ff,
                           const UnitsConfig& units) {
    units.validate();
    EnergyReport rep;
    rep.kinetic = kinetic_energy(s) / units.energy_to_native;
    rep.potential = ff.evaluate(s).total_energy;
    rep.total = rep.kinetic + rep.potential;
    return rep;
}

}  // namespace paramd
