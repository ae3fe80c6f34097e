#pragma once
#include <vector>

#include "paramd/msm_grid.hpp"
#include "paramd/units.hpp"

namespace paramd {

/// Spreads point charges onto the finest grid with nodal-basis weights.
/// Replaces level0.charge. Each particle touches its 4x4x4 stencil only.
void anterpolate(const ParticleSystem& s, MsmGridLevel& level0);

/// Transfers charges to the next coarser grid (adjoint of prolongation).
void restrict_charges(const MsmGridLevel& fine, MsmGridLevel& coarse);

/// On-grid convolution with the level kernel; fills level.potential with
/// the partial potential of this level. Not defined for the top level.
void lattice_cutoff(MsmGridLevel& level, const MsmConfig& config);

/// Dense all-pairs sum with the top-level kernel (no cutoff).
void top_level(MsmGridLevel& top, const MsmConfig& config);

/// Interpolates the coarse potential and adds it into fine.potential.
/// Exact transpose of restrict_charges.
void prolongate(const MsmGridLevel& coarse, MsmGridLevel& fine);

/// Per-particle potential (per unit charge) read off the finest grid.
std::vector<double> interpolate_to_atoms(const MsmGridLevel& level0, const ParticleSystem& s);

struct ShortRangeResult {
    std::vector<double> potential;  // per unit charge
    std::vector<Vec3> force;        // includes k_C
};

/// Pairwise g* sum over pairs with r < a, with analytic forces.
ShortRangeResult short_range(const ParticleSystem& s, const MsmConfig& config,
                             const UnitsConfig& units);

}  // namespace paramd
