#include "paramd/msm_phases.hpp"

#include <cmath>
#include <string>

#include "paramd/errors.hpp"
#include "paramd/msm_kernels.hpp"

namespace paramd {

namespace {

// 1-D stencil of the cubic basis around grid coordinate t: indices
// base..base+3 with weights Phi(t - index). Throws when the stencil
// leaves the lattice.
struct Stencil1D {
    int base;
    double w[4];
};

Stencil1D stencil_at(double t, int dims, const char* what, std::size_t id) {
    Stencil1D st{};
    st.base = static_cast<int>(std::floor(t)) - 1;
    if (st.base < 0 || st.base + 3 > dims - 1)
        throw CoverageError(std::string(what) + " " + std::to_string(id) +
                            " outside grid coverage");
    for (int d = 0; d < 4; ++d) st.w[d] = basis_phi(t - (st.base + d));
    return st;
}

void check_levels(const MsmGridLevel& fine, const MsmGridLevel& coarse) {
    if (coarse.level != fine.level + 1)
        throw HierarchyError("levels " + std::to_string(fine.level) + " -> " +
                             std::to_string(coarse.level) + " are not adjacent");
}

}  // namespace

void anterpolate(const ParticleSystem& s, MsmGridLevel& level0) {
    if (level0.level != 0) throw HierarchyError("anterpolation targets level 0");
    level0.charge.assign(level0.dims);
    const double inv_h = 1.0 / level0.spacing;
    for (std::size_t p = 0; p < s.size(); ++p) {
        const Vec3& r = s.positions[p];
        const Stencil1D sx =
            stencil_at((r.x - level0.origin.x) * inv_h, level0.dims[0], "particle", p);
        const Stencil1D sy =
            stencil_at((r.y - level0.origin.y) * inv_h, level0.dims[1], "particle", p);
        const Stencil1D sz =
            stencil_at((r.z - level0.origin.z) * inv_h, level0.dims[2], "particle", p);
        const double q = s.charges[p];
        for (int a = 0; a < 4; ++a) {
            const double qa = q * sx.w[a];
            for (int b = 0; b < 4; ++b) {
                const double qab = qa * sy.w[b];
                for (int c = 0; c < 4; ++c)
                    level0.charge.at(sx.base + a, sy.base + b, sz.base + c) += qab * sz.w[c];
            }
        }
    }
}

void restrict_charges(const MsmGridLevel& fine, MsmGridLevel& coarse) {
    check_levels(fine, coarse);
    coarse.charge.assign(coarse.dims);
    const double inv_s = 1.0 / coarse.spacing;
    for (int i = 0; i < fine.dims[0]; ++i) {
        const double tx = (fine.origin.x + i * fine.spacing - coarse.origin.x) * inv_s;
        for (int j = 0; j < fine.dims[1]; ++j) {
            const double ty = (fine.origin.y + j * fine.spacing - coarse.origin.y) * inv_s;
            for (int k = 0; k < fine.dims[2]; ++k) {
                const double q = fine.charge.at(i, j, k);
                if (q == 0.0) continue;
                const double tz =
                    (fine.origin.z + k * fine.spacing - coarse.origin.z) * inv_s;
                const Stencil1D sx = stencil_at(tx, coarse.dims[0], "fine grid point", i);
                const Stencil1D sy = stencil_at(ty, coarse.dims[1], "fine grid point", j);
                const Stencil1D sz = stencil_at(tz, coarse.dims[2], "fine grid point", k);
                for (int a = 0; a < 4; ++a) {
                    const double qa = q * sx.w[a];
                    for (int b = 0; b < 4; ++b) {
                        const double qab = qa * sy.w[b];
                        for (int c = 0; c < 4; ++c)
                            coarse.charge.at(sx.base + a, sy.base + b, sz.base + c) +=
                                qab * sz.w[c];
                    }
                }
            }
        }
    }
}

void lattice_cutoff(MsmGridLevel& level, const MsmConfig& config) {
    if (level.level > config.levels_l - 2)
        throw HierarchyError("lattice_cutoff is undefined on the top level");
    level.potential.assign(level.dims);

    // g^k vanishes beyond 2^{k+1} a, i.e. 2a/h grid points at every level.
    const int radius =
        static_cast<int>(std::ceil(2.0 * config.cutoff_a / config.spacing_h));
    const int w = 2 * radius + 1;
    std::vector<double> stencil(static_cast<std::size_t>(w) * w * w);
    for (int di = -radius; di <= radius; ++di)
        for (int dj = -radius; dj <= radius; ++dj)
            for (int dk = -radius; dk <= radius; ++dk) {
                const double r =
                    level.spacing * std::sqrt(double(di) * di + double(dj) * dj + double(dk) * dk);
                stencil[(static_cast<std::size_t>(di + radius) * w + (dj + radius)) * w +
                        (dk + radius)] =
                    kernel_g_level(r, config.cutoff_a, level.level, config.levels_l);
            }

    const auto& dims = level.dims;
    for (int i = 0; i < dims[0]; ++i)
        for (int j = 0; j < dims[1]; ++j)
            for (int k = 0; k < dims[2]; ++k) {
                const double q = level.charge.at(i, j, k);
                if (q == 0.0) continue;
                const int ilo = std::max(0, i - radius), ihi = std::min(dims[0] - 1, i + radius);
                const int jlo = std::max(0, j - radius), jhi = std::min(dims[1] - 1, j + radius);
                const int klo = std::max(0, k - radius), khi = std::min(dims[2] - 1, k + radius);
                for (int ti = ilo; ti <= ihi; ++ti) {
                    const std::size_t si = static_cast<std::size_t>(ti - i + radius) * w;
                    for (int tj = jlo; tj <= jhi; ++tj) {
                        const std::size_t sij = (si + (tj - j + radius)) * w;
                        const std::size_t base = level.potential.index(ti, tj, 0);
                        double* pot = level.potential.data.data() + base;
                        const double* sten = stencil.data() + sij + (klo - k + radius);
                        for (int tk = klo; tk <= khi; ++tk)
                            pot[tk] += q * sten[tk - klo];
                    }
                }
            }
}

void top_level(MsmGridLevel& top, const MsmConfig& config) {
    if (top.level != config.levels_l - 1)
        throw HierarchyError("top_level requires the coarsest grid (level " +
                             std::to_string(config.levels_l - 1) + ")");
    top.potential.assign(top.dims);
    const auto& dims = top.dims;
    const std::size_t m = top.charge.data.size();
    const double self = kernel_g_level(0.0, config.cutoff_a, top.level, config.levels_l);

    std::vector<Vec3> coords(m);
    std::size_t idx = 0;
    for (int i = 0; i < dims[0]; ++i)
        for (int j = 0; j < dims[1]; ++j)
            for (int k = 0; k < dims[2]; ++k)
                coords[idx++] = {top.origin.x + i * top.spacing, top.origin.y + j * top.spacing,
                                 top.origin.z + k * top.spacing};

    for (std::size_t mu = 0; mu < m; ++mu) {
        top.potential.data[mu] += self * top.charge.data[mu];
        for (std::size_t nu = mu + 1; nu < m; ++nu) {
            const double r = norm(coords[mu] - coords[nu]);
            const double g = kernel_g_level(r, config.cutoff_a, top.level, config.levels_l);
            top.potential.data[mu] += g * top.charge.data[nu];
            top.potential.data[nu] += g * top.charge.data[mu];
        }
    }
}

void prolongate(const MsmGridLevel& coarse, MsmGridLevel& fine) {
    check_levels(fine, coarse);
    const double inv_s = 1.0 / coarse.spacing;
    for (int i = 0; i < fine.dims[0]; ++i) {
        const double tx = (fine.origin.x + i * fine.spacing - coarse.origin.x) * inv_s;
        const Stencil1D sx = stencil_at(tx, coarse.dims[0], "fine grid point", i);
        for (int j = 0; j < fine.dims[1]; ++j) {
            const double ty = (fine.origin.y + j * fine.spacing - coarse.origin.y) * inv_s;
            const Stencil1D sy = stencil_at(ty, coarse.dims[1], "fine grid point", j);
            for (int k = 0; k < fine.dims[2]; ++k) {
                const double tz =
                    (fine.origin.z + k * fine.spacing - coarse.origin.z) * inv_s;
                const Stencil1D sz = stencil_at(tz, coarse.dims[2], "fine grid point", k);
                double acc = 0.0;
                for (int a = 0; a < 4; ++a) {
                    double accb = 0.0;
                    for (int b = 0; b < 4; ++b) {
                        double accc = 0.0;
                        for (int c = 0; c < 4; ++c)
                            accc += sz.w[c] *
                                    coarse.potential.at(sx.base + a, sy.base + b, sz.base + c);
                        accb += sy.w[b] * accc;
                    }
                    acc += sx.w[a] * accb;
                }
                fine.potential.at(i, j, k) += acc;
            }
        }
    }
}

std::vector<double> interpolate_to_atoms(const MsmGridLevel& level0, const ParticleSystem& s) {
    if (level0.level != 0) throw HierarchyError("interpolation reads level 0");
    std::vector<double> u(s.size(), 0.0);
    const double inv_h = 1.0 / level0.spacing;
    for (std::size_t p = 0; p < s.size(); ++p) {
        const Vec3& r = s.positions[p];
        const Stencil1D sx =
            stencil_at((r.x - level0.origin.x) * inv_h, level0.dims[0], "particle", p);
        const Stencil1D sy =
            stencil_at((r.y - level0.origin.y) * inv_h, level0.dims[1], "particle", p);
        const Stencil1D sz =
            stencil_at((r.z - level0.origin.z) * inv_h, level0.dims[2], "particle", p);
        double acc = 0.0;
        for (int a = 0; a < 4; ++a) {
            double accb = 0.0;
            for (int b = 0; b < 4; ++b) {
                double accc = 0.0;
                for (int c = 0; c < 4; ++c)
                    accc +=
                        sz.w[c] * level0.potential.at(sx.base + a, sy.base + b, sz.base + c);
                accb += sy.w[b] * accc;
            }
            acc += sx.w[a] * accb;
        }
        u[p] = acc;
    }
    return u;
}

ShortRangeResult short_range(const ParticleSystem& s, const MsmConfig& config,
                             const UnitsConfig& units) {
    const std::size_t n = s.size();
    ShortRangeResult res;
    res.potential.assign(n, 0.0);
    res.force.assign(n, Vec3{});
    const double a = config.cutoff_a;
    const double a2 = a * a;
    const double kc = units.coulomb_constant;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 d = s.positions[i] - s.positions[j];
            const double r2 = norm2(d);
            if (r2 == 0.0)
                throw CoincidentParticlesError("particles " + std::to_string(i) + " and " +
                                               std::to_string(j) + " coincide");
            if (r2 >= a2) continue;
            const double r = std::sqrt(r2);
            const double g = kernel_g_star(r, a);
            res.potential[i] += s.charges[j] * g;
            res.potential[j] += s.charges[i] * g;
            const double dg = kernel_g_star_deriv(r, a);
            const Vec3 f = d * (-kc * s.charges[i] * s.charges[j] * dg / r);
            res.force[i] += f;
            res.force[j] -= f;
        }
    }
    return res;
}

}  // namespace paramd
