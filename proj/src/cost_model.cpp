#include "paramd/cost_model.hpp"

#include <cmath>

namespace paramd {

double FlopParams::effective_h_star() const {
    if (h_star > 0.0) return h_star;
    return std::pow(n, -1.0 / 3.0) * box_l;
}

void FlopParams::validate() const {
    if (!(n > 0.0) || !(box_l > 0.0) || !(a > 0.0) || !(h > 0.0))
        throw ConfigError("flop model parameters must be positive");
    if (h_star < 0.0) throw ConfigError("h_star must be >= 0 (0 selects N^(-1/3) L)");
    if (m < 1 || p < 1) throw ConfigError("m and p must be >= 1");
}

FlopBreakdown msm_flops_general(const FlopParams& params) {
    params.validate();
    const double pi = 3.14159265358979323846;
    const double hs = params.effective_h_star();
    const double p = params.p;
    FlopBreakdown out;
    const double ratio_short = params.a / hs;
    out.short_range = (4.0 * pi * params.m / 3.0 + 32.0 * pi / 3.0 + 40.5) * ratio_short *
                      ratio_short * ratio_short * params.n;
    out.interpolation = (6.0 * p * p * p + 31.0 * p * p + 36.0 * p + 17.0) * params.n;
    const double stencil = 4.0 * params.a / params.h;
    const double ratio_grid = hs / params.h;
    out.grid = (stencil * stencil * stencil + 14.0 * (p + 2.0)) * (8.0 / 7.0) * ratio_grid *
               ratio_grid * ratio_grid * params.n;
    out.total = out.short_range + out.interpolation + out.grid;
    return out;
}

double msm_flops_simplified(double a, double h, double n) {
    if (!(a >= 0.0) || !(h > 0.0) || !(n > 0.0))
        throw ConfigError("msm_flops_simplified: invalid parameters");
    const double a3 = a * a * a;
    const double h3 = h * h * h;
    return 77.7 * a3 * n + 566.0 * n + 73.0 * a3 / (h3 * h3) * n + 80.0 / h3 * n;
}

double q_ratio(double q_f, double q_g) {
    if (!(q_g > 0.0)) throw ConfigError("q_ratio: Q_G must be > 0");
    return q_f / q_g;
}

double speedup_plan1(double q_ratio_value) {
    if (!(q_ratio_value > 0.0)) throw ConfigError("speedup_plan1: ratio must be > 0");
    return q_ratio_value / 2.0;
}

double speedup_plan2(double q_ratio_value, double t_points, double k_iters) {
    if (!(q_ratio_value > 0.0) || !(t_points > 0.0) || !(k_iters > 0.0))
        throw ConfigError("speedup_plan2: parameters must be > 0");
    return q_ratio_value / (1.0 + k_iters / (t_points * q_ratio_value));
}

}  // namespace paramd
