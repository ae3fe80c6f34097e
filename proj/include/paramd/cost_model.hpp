#pragma once
#include <cstddef>

#include "paramd/errors.hpp"

namespace paramd {

/// Default per-particle flop count of the simple-cutoff coarse propagator.
inline constexpr double kSimpleCutoffFlopsPerParticle = 301.0;

struct FlopParams {
    double n = 1.0;       // particle count
    double box_l = 1.0;   // L
    double a = 12.0;      // cutoff
    double h = 2.0;       // finest grid spacing
    double h_star = 0.0;  // average nearest-neighbor distance; 0 -> N^(-1/3) L
    int m = 2;
    int p = 3;

    double effective_h_star() const;
    void validate() const;
};

struct FlopBreakdown {
    double short_range = 0.0;     // (4 pi m/3 + 32 pi/3 + 81/2)(a/h*)^3 N
    double interpolation = 0.0;   // (6p^3 + 31p^2 + 36p + 17) N
    double grid = 0.0;            // ((4a/h)^3 + 14(p+2)) (8/7)(h*/h)^3 N
    double total = 0.0;
};

/// General three-term flop model, per MD step, all particles.
FlopBreakdown msm_flops_general(const FlopParams& params);

/// Instantiated model (h* = 1 A, m = 2, p = 3 baked in):
/// 77.7 a^3 N + 566 N + 73 a^3 N / h^6 + 80 N / h^3.
double msm_flops_simplified(double a, double h, double n);

/// Q_F / Q_G; throws on non-positive Q_G.
double q_ratio(double q_f, double q_g);

/// Plan 1: one unit runs the coarse chain, Q units then run fine in parallel.
double speedup_plan1(double q_ratio_value);

/// Plan 2: fine tasks dispatch as soon as their coarse prerequisite exists.
double speedup_plan2(double q_ratio_value, double t_points, double k_iters);

}  // namespace paramd
