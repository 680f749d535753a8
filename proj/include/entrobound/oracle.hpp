#ifndef ENTROBOUND_ORACLE_HPP
#define ENTROBOUND_ORACLE_HPP

#include <cmath>

#include "entrobound/entropy.hpp"
#include "entrobound/errors.hpp"
#include "entrobound/geometry.hpp"
#include "entrobound/solver.hpp"

namespace entrobound {

// Brute-force grid minimizer. Deliberately has no refinement step and
// shares no code path with the solver; it is the trusted slow route.
//
// Error bound: the objective is a sum of two terms H0(cos(angle)), each
// with |d/dangle| <= max_t |sin t / 2 * ln((1+cos t)/(1-cos t))| < 1.25,
// so the grid value overshoots the true minimum by at most
// oracle_lipschitz * (grid spacing).
inline constexpr double oracle_lipschitz = 2.5;

struct OracleResult {
    double value;
    UnitVector3 argmin;
    int resolution; // grid points per angle
};

// Angular grid spacing for a given per-angle resolution.
inline double oracle_grid_error(int resolution) {
    return oracle_lipschitz * (2.0 * pi / resolution);
}

// Minimizes H0(m.k) + H0(n.k) over a latitude-longitude grid of the full
// Bloch sphere. The plane of the pair is embedded as the equator so every
// planar candidate direction lies exactly on-grid.
inline OracleResult sphere_grid_min(double alpha, int resolution) {
    require_alpha_in_range(alpha, "sphere_grid_min");
    if (resolution < 64)
        throw DomainError("sphere_grid_min: resolution must be >= 64");

    const double ca = std::cos(alpha), sa = std::sin(alpha);
    double best = 4.0;
    double best_lon = 0.0, best_lat = 0.0;
    for (int i = 0; i <= resolution; ++i) {
        const double lat = -0.5 * pi + pi * i / resolution;
        const double cl = std::cos(lat);
        for (int j = 0; j < resolution; ++j) {
            const double lon = 2.0 * pi * j / resolution;
            // k = (cos lon * cos lat, sin lon * cos lat, sin lat); m = x, n in xy-plane
            const double kx = std::cos(lon) * cl;
            const double ky = std::sin(lon) * cl;
            const double v = binary_entropy(kx) + binary_entropy(ca * kx + sa * ky);
            if (v < best) {
                best = v;
                best_lon = lon;
                best_lat = lat;
            }
        }
    }
    const double cl = std::cos(best_lat);
    return OracleResult{best,
                        UnitVector3(std::cos(best_lon) * cl, std::sin(best_lon) * cl,
                                    std::sin(best_lat)),
                        resolution};
}

// Same objective restricted to the equatorial plane, on a theta-grid over
// [0, 2pi).
inline OracleResult plane_grid_min(double alpha, int resolution) {
    require_alpha_in_range(alpha, "plane_grid_min");
    if (resolution < 64)
        throw DomainError("plane_grid_min: resolution must be >= 64");

    double best = 4.0;
    double best_theta = 0.0;
    for (int j = 0; j < resolution; ++j) {
        const double theta = 2.0 * pi * j / resolution;
        const double v = entropy_sum(theta, alpha);
        if (v < best) {
            best = v;
            best_theta = theta;
        }
    }
    return OracleResult{best, UnitVector3(std::cos(best_theta), std::sin(best_theta), 0.0),
                        resolution};
}

} // namespace entrobound

#endif
