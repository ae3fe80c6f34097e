#include "paramd/electrostatics.hpp"

#include <cmath>
#include <string>

#include "paramd/errors.hpp"

namespace paramd {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955126;  // 2/sqrt(pi)

void check_distinct(double r2, std::size_t i, std::size_t j) {
    if (r2 == 0.0)
        throw CoincidentParticlesError("particles " + std::to_string(i) + " and " +
                                       std::to_string(j) + " coincide");
}

PotentialResult make_result(std::size_t n) {
    PotentialResult res;
    res.per_particle_potential.assign(n, 0.0);
    res.per_particle_force.assign(n, Vec3{});
    return res;
}

double finish_total(PotentialResult& res, const ParticleSystem& s, const UnitsConfig& units) {
    double e = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        e += 0.5 * s.charges[i] * res.per_particle_potential[i];
    res.total_energy = e * units.coulomb_constant;
    return res.total_energy;
}

}  // namespace

void CutoffParams::validate(bool need_alpha) const {
    if (!(cutoff > 0.0)) throw ConfigError("cutoff must be > 0");
    if (need_alpha && !wolf_alpha) throw ConfigError("wolf_alpha is required");
    if (wolf_alpha && !(*wolf_alpha >= 0.0)) throw ConfigError("wolf_alpha must be >= 0");
}

PotentialResult direct_coulomb(const ParticleSystem& s, const UnitsConfig& units) {
    units.validate();
    const std::size_t n = s.size();
    PotentialResult res = make_result(n);
    const double kc = units.coulomb_constant;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 d = s.positions[i] - s.positions[j];
            const double r2 = norm2(d);
            check_distinct(r2, i, j);
            const double r = std::sqrt(r2);
            const double inv_r = 1.0 / r;
            res.per_particle_potential[i] += s.charges[j] * inv_r;
            res.per_particle_potential[j] += s.charges[i] * inv_r;
            const Vec3 f = d * (kc * s.charges[i] * s.charges[j] * inv_r * inv_r * inv_r);
            res.per_particle_force[i] += f;
            res.per_particle_force[j] -= f;
        }
    }
    finish_total(res, s, units);
    return res;
}

PotentialResult simple_cutoff(const ParticleSystem& s, const CutoffParams& params,
                              const UnitsConfig& units) {
    units.validate();
    params.validate(false);
    const std::size_t n = s.size();
    PotentialResult res = make_result(n);
    const double kc = units.coulomb_constant;
    const double a2 = params.cutoff * params.cutoff;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 d = s.positions[i] - s.positions[j];
            const double r2 = norm2(d);
            check_distinct(r2, i, j);
            if (r2 >= a2) continue;
            const double r = std::sqrt(r2);
            const double inv_r = 1.0 / r;
            res.per_particle_potential[i] += s.charges[j] * inv_r;
            res.per_particle_potential[j] += s.charges[i] * inv_r;
            const Vec3 f = d * (kc * s.charges[i] * s.charges[j] * inv_r * inv_r * inv_r);
            res.per_particle_force[i] += f;
            res.per_particle_force[j] -= f;
        }
    }
    finish_total(res, s, units);
    return res;
}

PotentialResult wolf_summation(const ParticleSystem& s, const CutoffParams& params,
                               const UnitsConfig& units) {
    units.validate();
    params.validate(true);
    const std::size_t n = s.size();
    PotentialResult res = make_result(n);
    const double kc = units.coulomb_constant;
    const double a = params.cutoff;
    const double alpha = *params.wolf_alpha;

    const double erfc_aa = std::erfc(alpha * a);
    const double e_shift = erfc_aa / a;
    const double f_shift =
        erfc_aa / (a * a) + kTwoOverSqrtPi * alpha * std::exp(-alpha * alpha * a * a) / a;
    const double self_per_charge = -(e_shift + kTwoOverSqrtPi * alpha);

    const double a2 = a * a;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 d = s.positions[i] - s.positions[j];
            const double r2 = norm2(d);
            check_distinct(r2, i, j);
            if (r2 >= a2) continue;
            const double r = std::sqrt(r2);
            const double erfc_ar = std::erfc(alpha * r);
            const double gauss = kTwoOverSqrtPi * alpha * std::exp(-alpha * alpha * r2);
            const double pair = erfc_ar / r - e_shift + f_shift * (r - a);
            const double fmag = erfc_ar / r2 + gauss / r - f_shift;  // -dV/dr, zero at r = a
            res.per_particle_potential[i] += s.charges[j] * pair;
            res.per_particle_potential[j] += s.charges[i] * pair;
            const Vec3 f = d * (kc * s.charges[i] * s.charges[j] * fmag / r);
            res.per_particle_force[i] += f;
            res.per_particle_force[j] -= f;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        res.per_particle_potential[i] += s.charges[i] * self_per_charge;
    finish_total(res, s, units);
    return res;
}

}  // namespace paramd
