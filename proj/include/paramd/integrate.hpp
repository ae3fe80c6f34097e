#pragma once
#include <memory>

#include "paramd/force_field.hpp"
#include "paramd/system.hpp"
#include "paramd/units.hpp"

namespace paramd {

/// One propagator: a force field plus the timestep and slice length it is
/// advanced with. dt * steps_per_slice is the slice span shared by the
/// fine and coarse propagators of a parareal run.
struct PropagatorSpec {
    std::shared_ptr<const ForceField> force_field;
    double dt = 1.0;          // fs
    int steps_per_slice = 1;

    double slice_span() const { return dt * steps_per_slice; }
    void validate() const;
};

/// Standard velocity Verlet, one force evaluation per step.
ParticleSystem verlet_step(const ParticleSystem& s, const ForceField& ff, double dt,
                           const UnitsConfig& units);

/// steps_per_slice Verlet steps; the trailing force of each step seeds the next.
ParticleSystem propagate(const PropagatorSpec& spec, const ParticleSystem& s,
                         const UnitsConfig& units);

struct EnergyReport {
    double kinetic = 0.0;
    double potential = 0.0;
    double total = 0.0;
};

/// Kinetic converted into the force field's energy unit so the sum is meaningful.
EnergyReport energy_report(const ParticleSystem& s, const ForceField& ff,
                           const UnitsConfig& units);

}  // namespace paramd
