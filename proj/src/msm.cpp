#include "paramd/msm.hpp"

#include <cmath>

#include "paramd/msm_kernels.hpp"
#include "paramd/msm_phases.hpp"

namespace paramd {

namespace {

// d/dr of the final interpolation step, evaluated per particle against the
// finished level-0 potential. The transfer operators are adjoint pairs and
// every on-grid kernel is symmetric, so this is the exact gradient of the
// total long-range energy.
void add_long_range_forces(const ParticleSystem& s, const MsmGridLevel& level0,
                           const UnitsConfig& units, std::vector<Vec3>& force) {
    const double inv_h = 1.0 / level0.spacing;
    const double kc = units.coulomb_constant;
    for (std::size_t p = 0; p < s.size(); ++p) {
        const Vec3& r = s.positions[p];
        const double tx = (r.x - level0.origin.x) * inv_h;
        const double ty = (r.y - level0.origin.y) * inv_h;
        const double tz = (r.z - level0.origin.z) * inv_h;
        const int bx = static_cast<int>(std::floor(tx)) - 1;
        const int by = static_cast<int>(std::floor(ty)) - 1;
        const int bz = static_cast<int>(std::floor(tz)) - 1;
        double wx[4], wy[4], wz[4], dwx[4], dwy[4], dwz[4];
        for (int d = 0; d < 4; ++d) {
            wx[d] = basis_phi(tx - (bx + d));
            wy[d] = basis_phi(ty - (by + d));
            wz[d] = basis_phi(tz - (bz + d));
            dwx[d] = basis_phi_deriv(tx - (bx + d)) * inv_h;
            dwy[d] = basis_phi_deriv(ty - (by + d)) * inv_h;
            dwz[d] = basis_phi_deriv(tz - (bz + d)) * inv_h;
        }
        Vec3 grad{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    const double u = level0.potential.at(bx + a, by + b, bz + c);
                    grad.x += dwx[a] * wy[b] * wz[c] * u;
                    grad.y += wx[a] * dwy[b] * wz[c] * u;
                    grad.z += wx[a] * wy[b] * dwz[c] * u;
                }
        force[p] -= grad * (kc * s.charges[p]);
    }
}

}  // namespace

PotentialResult msm_potential(const ParticleSystem& s, const MsmConfig& config,
                              const UnitsConfig& units, MsmDiagnostics* diag) {
    config.validate();
    units.validate();
    const std::size_t n = s.size();

    ShortRangeResult sr = short_range(s, config, units);

    std::vector<MsmGridLevel> levels = build_grid_hierarchy(s, config);
    anterpolate(s, levels[0]);
    for (int k = 0; k + 1 < config.levels_l; ++k) {
        restrict_charges(levels[k], levels[k + 1]);
        lattice_cutoff(levels[k], config);
    }
    top_level(levels.back(), config);
    for (int k = config.levels_l - 2; k >= 0; --k) prolongate(levels[k + 1], levels[k]);

    std::vector<double> u_long = interpolate_to_atoms(levels[0], s);
    // Remove the grid-mediated self interaction; the split kernels at r = 0
    // telescope to gamma(0)/a per unit charge.
    const double self = smoothing_gamma(0.0, config.smoothing_m) / config.cutoff_a;
    for (std::size_t i = 0; i < n; ++i) u_long[i] -= s.charges[i] * self;

    PotentialResult res;
    res.per_particle_potential.assign(n, 0.0);
    res.per_particle_force = sr.force;
    add_long_range_forces(s, levels[0], units, res.per_particle_force);
    for (std::size_t i = 0; i < n; ++i)
        res.per_particle_potential[i] = sr.potential[i] + u_long[i];
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        e += 0.5 * s.charges[i] * res.per_particle_potential[i];
    res.total_energy = e * units.coulomb_constant;
    res.short_part = std::move(sr.potential);
    res.long_part = std::move(u_long);

    if (diag) diag->levels = std::move(levels);
    return res;
}

}  // namespace paramd
