#pragma once
#include <vector>

#include "paramd/msm_grid.hpp"
#include "paramd/potential.hpp"
#include "paramd/units.hpp"

namespace paramd {

/// Per-level lattices captured for diagnostic dumps.
struct MsmDiagnostics {
    std::vector<MsmGridLevel> levels;
};

/**
 * Full multilevel summation: anterpolation, per-level restriction and
 * lattice cutoff, dense top level, prolongation back down, interpolation
 * to atoms, plus the direct short-range part. The grid-mediated self
 * interaction (gamma(0)/a per unit charge) is subtracted from the
 * long-range potential. Long-range forces differentiate the final
 * interpolation; the transfer operators are exact adjoint pairs, so these
 * are the exact gradient of the reported energy.
 */
PotentialResult msm_potential(const ParticleSystem& s, const MsmConfig& config,
                              const UnitsConfig& units, MsmDiagnostics* diag = nullptr);

}  // namespace paramd
