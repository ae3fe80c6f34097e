#pragma once
#include "paramd/potential.hpp"
#include "paramd/system.hpp"
#include "paramd/units.hpp"

namespace paramd {

/// Exact O(N^2) Coulomb sum; the oracle every approximation is measured against.
PotentialResult direct_coulomb(const ParticleSystem& s, const UnitsConfig& units);

/// Coulomb sum truncated at r >= cutoff; pairs beyond contribute exactly zero.
PotentialResult simple_cutoff(const ParticleSystem& s, const CutoffParams& params,
                              const UnitsConfig& units);

/**
 * Damped-shifted-force (DSF) electrostatics. Pair term for r < a:
 *   erfc(ar)/r - erfc(aa)/a + F_s (r - a),   F_s = erfc(aa)/a^2 + (2a/sqrt(pi)) e^(-a^2 a^2)/a
 * so the force is the exact gradient, continuous and zero at r = a.
 * Each particle carries the self term -q_i^2 [erfc(aa)/(2a) + a/sqrt(pi)].
 */
PotentialResult wolf_summation(const ParticleSystem& s, const CutoffParams& params,
                               const UnitsConfig& units);

}  // namespace paramd
