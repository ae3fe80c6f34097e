#include "paramd/msm_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "paramd/errors.hpp"

namespace paramd {

void MsmConfig::validate() const {
    if (!(cutoff_a > 0.0)) throw ConfigError("msm: cutoff_a must be > 0");
    if (!(spacing_h > 0.0)) throw ConfigError("msm: spacing_h must be > 0");
    if (levels_l < 1) throw ConfigError("msm: levels_l must be >= 1");
    if (interp_order_p != 3)
        throw ConfigError("msm: unsupported interpolation order p=" +
                          std::to_string(interp_order_p));
    if (smoothing_m != 2)
        throw ConfigError("msm: unsupported smoothing order m=" + std::to_string(smoothing_m));
    if (cutoff_a / spacing_h < 1.0)
        throw ConfigError("msm: cutoff_a / spacing_h must be >= 1");
}

std::vector<MsmGridLevel> build_grid_hierarchy(const ParticleSystem& s, const MsmConfig& config) {
    config.validate();
    if (!(s.box.x > 0.0 && s.box.y > 0.0 && s.box.z > 0.0))
        throw ConfigError("msm: box extents must be positive");

    const double box[3] = {s.box.x, s.box.y, s.box.z};
    std::vector<MsmGridLevel> levels(config.levels_l);
    for (int k = 0; k < config.levels_l; ++k) {
        MsmGridLevel& lvl = levels[k];
        lvl.level = k;
        lvl.spacing = std::ldexp(config.spacing_h, k);
        lvl.origin = {-2.0 * lvl.spacing, -2.0 * lvl.spacing, -2.0 * lvl.spacing};
        for (int axis = 0; axis < 3; ++axis) {
            // Cover the box plus a two-point margin on each side; coarser
            // levels additionally must hold the full 4-point stencil of every
            // point of the level below.
            int d = static_cast<int>(std::ceil(box[axis] / lvl.spacing)) + 5;
            if (k > 0) {
                const int fine_d = levels[k - 1].dims[axis];
                d = std::max(d, (fine_d + 1) / 2 + 3);
            }
            if (d < 2)
                throw ConfigError("msm: level " + std::to_string(k) +
                                  " would have fewer than 2 points per axis");
            lvl.dims[axis] = d;
        }
        lvl.charge.assign(lvl.dims);
        lvl.potential.assign(lvl.dims);
    }
    return levels;
}

}  // namespace paramd
