#include "paramd/force_field.hpp"

#include <cmath>
#include <string>

#include "paramd/cost_model.hpp"
#include "paramd/electrostatics.hpp"
#include "paramd/errors.hpp"
#include "paramd/msm.hpp"

namespace paramd {

PotentialResult DirectCoulombField::evaluate(const ParticleSystem& s) const {
    return direct_coulomb(s, units_);
}

double DirectCoulombField::cost_flops_per_step(std::size_t n) const {
    return 20.0 * static_cast<double>(n) * static_cast<double>(n);
}

PotentialResult SimpleCutoffField::evaluate(const ParticleSystem& s) const {
    return simple_cutoff(s, params_, units_);
}

double SimpleCutoffField::cost_flops_per_step(std::size_t n) const {
    return flops_per_particle_ * static_cast<double>(n);
}

PotentialResult WolfField::evaluate(const ParticleSystem& s) const {
    return wolf_summation(s, params_, units_);
}

double WolfField::cost_flops_per_step(std::size_t n) const {
    return flops_per_particle_ * static_cast<double>(n);
}

PotentialResult MsmField::evaluate(const ParticleSystem& s) const {
    return msm_potential(s, config_, units_);
}

double MsmField::cost_flops_per_step(std::size_t n) const {
    return msm_flops_simplified(config_.cutoff_a, config_.spacing_h, static_cast<double>(n));
}

PotentialResult PairRepulsionOverlay::evaluate(const ParticleSystem& s) const {
    PotentialResult res = base_->evaluate(s);
    const double s6 = std::pow(sigma_, 6.0);
    const double s12 = s6 * s6;
    double e = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const Vec3 d = s.positions[i] - s.positions[j];
            const double r2 = norm2(d);
            if (r2 == 0.0)
                throw CoincidentParticlesError("particles " + std::to_string(i) + " and " +
                                               std::to_string(j) + " coincide");
            const double inv_r2 = 1.0 / r2;
            const double inv_r12 = inv_r2 * inv_r2 * inv_r2 * inv_r2 * inv_r2 * inv_r2;
            e += epsilon_ * s12 * inv_r12;
            // F = 12 eps (sigma/r)^12 / r, along d
            const Vec3 f = d * (12.0 * epsilon_ * s12 * inv_r12 * inv_r2);
            res.per_particle_force[i] += f;
            res.per_particle_force[j] -= f;
        }
    }
    res.total_energy += e;
    return res;
}

double PairRepulsionOverlay::cost_flops_per_step(std::size_t n) const {
    return base_->cost_flops_per_step(n) + 30.0 * static_cast<double>(n);
}

}  // namespace paramd
