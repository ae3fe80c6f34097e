#pragma once
#include <cmath>

#include "paramd/errors.hpp"

namespace paramd {

/**
 * Even polynomial smoothing of 1/rho, C^2 at rho = 1:
 *   gamma(rho) = 15/8 - 5/4 rho^2 + 3/8 rho^4   for rho < 1
 *              = 1/rho                           for rho >= 1
 * Only the degree-4 form (m = 2) is supported.
 */
inline double smoothing_gamma(double rho, int m = 2) {
    if (m != 2) throw ConfigError("unsupported smoothing order m=" + std::to_string(m));
    if (!(rho >= 0.0)) throw DomainError("smoothing_gamma: rho must be >= 0");
    if (rho >= 1.0) return 1.0 / rho;
    const double r2 = rho * rho;
    return 1.875 + r2 * (-1.25 + 0.375 * r2);
}

inline double smoothing_gamma_deriv(double rho, int m = 2) {
    if (m != 2) throw ConfigError("unsupported smoothing order m=" + std::to_string(m));
    if (!(rho >= 0.0)) throw DomainError("smoothing_gamma_deriv: rho must be >= 0");
    if (rho >= 1.0) return -1.0 / (rho * rho);
    return rho * (-2.5 + 1.5 * rho * rho);
}

/// Short-range kernel g*(r) = 1/r - gamma(r/a)/a, exactly zero for r >= a.
inline double kernel_g_star(double r, double a) {
    if (!(r > 0.0)) throw DomainError("kernel_g_star: r must be > 0");
    if (!(a > 0.0)) throw DomainError("kernel_g_star: a must be > 0");
    if (r >= a) return 0.0;
    return 1.0 / r - smoothing_gamma(r / a) / a;
}

inline double kernel_g_star_deriv(double r, double a) {
    if (!(r > 0.0)) throw DomainError("kernel_g_star_deriv: r must be > 0");
    if (!(a > 0.0)) throw DomainError("kernel_g_star_deriv: a must be > 0");
    if (r >= a) return 0.0;
    return -1.0 / (r * r) - smoothing_gamma_deriv(r / a) / (a * a);
}

/**
 * Grid-level kernel. For k < l-1 the two-scale difference
 *   gamma(r/(2^k a))/(2^k a) - gamma(r/(2^{k+1} a))/(2^{k+1} a),
 * exactly zero once r >= 2^{k+1} a; the top level k = l-1 keeps the single
 * term, which extends to all r through the 1/rho branch. Finite at r = 0.
 */
inline double kernel_g_level(double r, double a, int k, int l) {
    if (!(a > 0.0)) throw DomainError("kernel_g_level: a must be > 0");
    if (!(r >= 0.0)) throw DomainError("kernel_g_level: r must be >= 0");
    if (l < 1 || k < 0 || k > l - 1)
        throw ConfigError("kernel_g_level: level index " + std::to_string(k) +
                          " outside [0, " + std::to_string(l - 1) + "]");
    const double ak = std::ldexp(a, k);  // 2^k a
    if (k == l - 1) return smoothing_gamma(r / ak) / ak;
    const double ak1 = 2.0 * ak;
    if (r >= ak1) return 0.0;
    return smoothing_gamma(r / ak) / ak - smoothing_gamma(r / ak1) / ak1;
}

/**
 * Cubic nodal basis (p = 3), the C^1 interpolant
 *   Phi(x) = (1-|x|)(1+|x|-3/2 x^2)        |x| <= 1
 *          = -1/2 (|x|-1)(2-|x|)^2          1 < |x| <= 2
 *          = 0                              otherwise
 * Phi(0) = 1 and Phi vanishes on every other integer, so grid values
 * interpolate exactly; the 4-point stencil sums to 1 for any offset.
 */
inline double basis_phi(double xi, int p = 3) {
    if (p != 3) throw ConfigError("unsupported interpolation order p=" + std::to_string(p));
    const double t = std::fabs(xi);
    if (t >= 2.0) return 0.0;
    if (t <= 1.0) return 1.0 + t * t * (-2.5 + 1.5 * t);
    const double u = 2.0 - t;
    return -0.5 * (t - 1.0) * u * u;
}

inline double basis_phi_deriv(double xi, int p = 3) {
    if (p != 3) throw ConfigError("unsupported interpolation order p=" + std::to_string(p));
    const double t = std::fabs(xi);
    double d;
    if (t >= 2.0) {
        d = 0.0;
    } else if (t <= 1.0) {
        d = t * (-5.0 + 4.5 * t);
    } else {
        d = -0.5 * (2.0 - t) * (4.0 - 3.0 * t);
    }
    return xi < 0.0 ? -d : d;
}

}  // namespace paramd
