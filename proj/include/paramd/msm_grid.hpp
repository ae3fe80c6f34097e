#pragma once
#include <array>
#include <cstddef>
#include <vector>

#include "paramd/system.hpp"

namespace paramd {

struct MsmConfig {
    double cutoff_a = 8.0;   // a
    double spacing_h = 2.0;  // finest grid spacing h
    int levels_l = 2;        // l
    int interp_order_p = 3;  // p
    int smoothing_m = 2;     // m

    void validate() const;
};

/// Dense 3-D lattice, row-major (x slowest).
struct Lattice3 {
    std::array<int, 3> dims{};
    std::vector<double> data;

    void assign(const std::array<int, 3>& d) {
        dims = d;
        data.assign(static_cast<std::size_t>(d[0]) * d[1] * d[2], 0.0);
    }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k;
    }
    double& at(int i, int j, int k) { return data[index(i, j, k)]; }
    double at(int i, int j, int k) const { return data[index(i, j, k)]; }
};

/**
 * One level of the grid pyramid. Level k has spacing 2^k h and is anchored
 * at box origin minus a two-point margin of its own spacing, so every level
 * covers the box plus the support radius of the nodal basis, and fine grid
 * points always carry a complete 4-point stencil on the next coarser level.
 */
struct MsmGridLevel {
    int level = 0;
    double spacing = 0.0;
    Vec3 origin{};
    std::array<int, 3> dims{};
    Lattice3 charge;
    Lattice3 potential;
};

/// Builds levels 0..l-1 with zeroed lattices.
std::vector<MsmGridLevel> build_grid_hierarchy(const ParticleSystem& s, const MsmConfig& config);

}  // namespace paramd
