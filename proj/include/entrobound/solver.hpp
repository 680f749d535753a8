#ifndef ENTROBOUND_SOLVER_HPP
#define ENTROBOUND_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "entrobound/entropy.hpp"
#include "entrobound/errors.hpp"

namespace entrobound {

inline constexpr double pi = std::numbers::pi;

struct CriticalAngle {
    double value;    // radians, in (0, pi/2)
    double residual; // equation LHS at value
};

// LHS of the critical-angle equation: -cos(a/2) ln[tan^2(a/4)] - 2.
// This is the second theta-derivative of the entropy sum at theta = a/2.
inline double critical_angle_equation(double a) {
    const double t = std::tan(0.25 * a);
    return -std::cos(0.5 * a) * std::log(t * t) - 2.0;
}

// Unique root of the critical-angle equation in (0, pi/2), by bracketing
// bisection with a final pick of the endpoint minimizing the residual.
inline CriticalAngle critical_angle(double tol = 1e-12) {
    double lo = 0.5, hi = 1.5;
    double flo = critical_angle_equation(lo);
    double fhi = critical_angle_equation(hi);
    if (!(flo > 0.0 && fhi < 0.0))
        throw ConvergenceFailure("critical_angle: bracket [0.5, 1.5] lost");
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = critical_angle_equation(mid);
        if (fm > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    const CriticalAngle out = std::abs(flo) < std::abs(fhi)
                                  ? CriticalAngle{lo, flo}
                                  : CriticalAngle{hi, fhi};
    if (std::abs(out.residual) > tol)
        throw ConvergenceFailure("critical_angle: residual " + std::to_string(out.residual) +
                                 " exceeds tolerance");
    return out;
}

// Cached critical angle; solved once, used by every regime classification.
inline double cached_critical_angle() {
    static const double value = critical_angle().value;
    return value;
}

enum class Regime { TwoLow, Four, TwoHigh };

inline const char* regime_name(Regime r) {
    switch (r) {
    case Regime::TwoLow: return "TwoLow";
    case Regime::Four: return "Four";
    case Regime::TwoHigh: return "TwoHigh";
    }
    return "?";
}

inline void require_alpha_in_range(double alpha, const char* where) {
    if (!(alpha >= 0.0 && alpha < pi))
        throw DomainError(std::string(where) + ": alpha must lie in [0, pi)");
}

// Interval membership follows the closed/open pattern [0, ac], (ac, pi-ac), [pi-ac, pi).
inline Regime classify_regime(double alpha) {
    require_alpha_in_range(alpha, "classify_regime");
    const double ac = cached_critical_angle();
    if (alpha <= ac) return Regime::TwoLow;
    if (alpha < pi - ac) return Regime::Four;
    return Regime::TwoHigh;
}

// Analytic bound for the low two-minima regime: 2 H0(cos(alpha/2)).
inline double analytic_bound_low(double alpha) {
    require_alpha_in_range(alpha, "analytic_bound_low");
    if (alpha > cached_critical_angle() + 1e-12)
        throw DomainError("analytic_bound_low: alpha beyond the critical angle");
    return 2.0 * binary_entropy(std::cos(0.5 * alpha));
}

// Analytic bound for the high two-minima regime: 2 H0(sin(alpha/2)).
inline double analytic_bound_high(double alpha) {
    require_alpha_in_range(alpha, "analytic_bound_high");
    if (alpha < pi - cached_critical_angle() - 1e-12)
        throw DomainError("analytic_bound_high: alpha below pi minus the critical angle");
    return 2.0 * binary_entropy(std::sin(0.5 * alpha));
}

struct SolverOptions {
    int grid = 4096;           // scan points over [0, pi)
    double theta_tol = 1e-12;  // refinement tolerance in theta
    double value_merge = 1e-10;// keep minima within this of the global minimum
    double dedup_radius = 1e-6;// merge refined minima closer than this
};

struct Minimum {
    double theta; // in [0, 2pi)
    double value;
};

struct MinimaProfile {
    double alpha;
    Regime regime;
    std::vector<Minimum> minima; // sorted ascending by theta
    double bound;                // common global minimum value
};

namespace detail {

// Golden-section minimization of f(theta; alpha) on [a, b].
inline double golden_section(double a, double b, double alpha, double tol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = entropy_sum(x1, alpha);
    double f2 = entropy_sum(x2, alpha);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = entropy_sum(x1, alpha);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = entropy_sum(x2, alpha);
        }
    }
    return 0.5 * (a + b);
}

// Bisection on d1 inside [a, b], requiring d1(a) < 0 < d1(b), followed by a
// short Newton polish. Returns nullopt when the derivative bracket is
// unusable (singular endpoints or no sign change).
inline std::optional<double> refine_by_derivative(double a, double b, double alpha, double tol) {
    if (!derivatives_defined(a, alpha) || !derivatives_defined(b, alpha)) return std::nullopt;
    double da = entropy_sum_d1(a, alpha);
    double db = entropy_sum_d1(b, alpha);
    if (!(da < 0.0 && db > 0.0)) return std::nullopt;
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (!derivatives_defined(mid, alpha)) return std::nullopt;
        const double dm = entropy_sum_d1(mid, alpha);
        if (dm < 0.0)
            a = mid;
        else
            b = mid;
    }
    double theta = 0.5 * (a + b);
    for (int i = 0; i < 3 && derivatives_defined(theta, alpha); ++i) {
        const double d2 = entropy_sum_d2(theta, alpha);
        if (d2 <= 0.0) break;
        const double step = entropy_sum_d1(theta, alpha) / d2;
        if (std::abs(step) > 1e-3) break;
        theta -= step;
    }
    return theta;
}

// Refine the basin [a, b] around a grid local minimum.
inline double refine_basin(double a, double b, double alpha, double tol) {
    if (auto t = refine_by_derivative(a, b, alpha, tol)) return *t;
    double theta = golden_section(a, b, alpha, std::max(tol, 1e-11));
    // polish when the closed-form derivatives exist at the golden estimate
    for (int i = 0; i < 4 && derivatives_defined(theta, alpha); ++i) {
        const double d2 = entropy_sum_d2(theta, alpha);
        if (d2 <= 0.0) break;
        const double step = entropy_sum_d1(theta, alpha) / d2;
        if (std::abs(step) > 1e-4 || !std::isfinite(step)) break;
        theta -= step;
    }
    return theta;
}

// Singular point of the derivative formulas nearest to t (either a
// multiple of pi or alpha plus a multiple of pi).
inline double nearest_singular_point(double t, double alpha) {
    const double d0 = std::remainder(t, pi);
    const double d1 = std::remainder(alpha - t, pi);
    return std::abs(d0) <= std::abs(d1) ? t - d0 : t + d1;
}

// For a symmetric stationary point s with negative curvature, locate the
// bifurcated child minimum at s + u (u > 0) by expanding until d1 changes
// sign, then bisecting. If the search runs into a derivative-singular
// point, the minimum sits at that singular point itself and its location
// is returned directly.
inline std::optional<double> child_of_symmetric_point(double s, double alpha, double tol) {
    const double window = 0.5 * pi - 1e-9;
    double lo = 0.0; // offset from s with d1 < 0 (d1(s) = 0, curvature < 0)
    double hi = 1e-9;
    while (hi < window) {
        if (!derivatives_defined(s + hi, alpha)) break;
        const double d = entropy_sum_d1(s + hi, alpha);
        if (d > 0.0) break;
        lo = hi;
        hi *= 2.0;
    }
    hi = std::min(hi, window);
    if (!derivatives_defined(s + hi, alpha) || entropy_sum_d1(s + hi, alpha) <= 0.0)
        return nearest_singular_point(s + hi, alpha);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (!derivatives_defined(s + mid, alpha))
            return nearest_singular_point(s + mid, alpha);
        if (entropy_sum_d1(s + mid, alpha) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return s + 0.5 * (lo + hi);
}

inline double wrap_half_period(double theta) {
    double t = std::fmod(theta, pi);
    if (t < 0.0) t += pi;
    return t;
}

} // namespace detail

// Enumerates all global minima of the entropy sum over [0, 2pi) for fixed
// alpha. A grid scan over one half-period [0, pi) locates candidate basins
// (the objective has period pi); each basin is refined by derivative
// bisection, falling back to golden section where the closed-form
// derivatives are singular. The two symmetry-forced stationary points
// alpha/2 and alpha/2 + pi/2 are handled analytically so the bifurcation
// is resolved far below grid resolution. Results from [0, pi) are mirrored
// by +pi to fill [0, 2pi).
inline MinimaProfile numeric_minima(double alpha, const SolverOptions& opts = {}) {
    require_alpha_in_range(alpha, "numeric_minima");
    const int n = std::max(opts.grid, 16);
    const double h = pi / n;

    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) f[i] = entropy_sum(i * h, alpha);

    std::vector<double> candidates;
    for (int i = 0; i < n; ++i) {
        const double fl = f[(i + n - 1) % n];
        const double fr = f[(i + 1) % n];
        if (f[i] <= fl && f[i] <= fr)
            candidates.push_back(detail::refine_basin((i - 1) * h, (i + 1) * h, alpha, opts.theta_tol));
    }

    // symmetry-forced stationary points (one half-period apart)
    for (const double s : {0.5 * alpha, 0.5 * alpha + 0.5 * pi}) {
        if (derivatives_defined(s, alpha)) {
            if (entropy_sum_d2(s, alpha) >= 0.0) {
                candidates.push_back(s);
            } else if (auto child = detail::child_of_symmetric_point(s, alpha, opts.theta_tol)) {
                candidates.push_back(*child);
                candidates.push_back(2.0 * s - *child); // mirror about s
            }
        } else if (entropy_sum(s, alpha) <= entropy_sum(s + 1e-7, alpha) &&
                   entropy_sum(s, alpha) <= entropy_sum(s - 1e-7, alpha)) {
            candidates.push_back(s);
        }
    }

    for (double& t : candidates) t = detail::wrap_half_period(t);
    std::sort(candidates.begin(), candidates.end());

    // merge near-duplicates cyclically, keeping the lower value
    std::vector<Minimum> merged;
    for (const double t : candidates) {
        const double v = entropy_sum(t, alpha);
        if (!merged.empty() && t - merged.back().theta < opts.dedup_radius) {
            if (v < merged.back().value) merged.back() = {t, v};
        } else {
            merged.push_back({t, v});
        }
    }
    if (merged.size() > 1 &&
        merged.front().theta + pi - merged.back().theta < opts.dedup_radius) {
        // wrap-around duplicate: fold the representative back near zero
        const double t = std::max(merged.back().theta - pi, 0.0);
        const Minimum folded{t, entropy_sum(t, alpha)};
        if (folded.value < merged.front().value) merged.front() = folded;
        merged.pop_back();
    }

    double best = merged.front().value;
    for (const auto& m : merged) best = std::min(best, m.value);

    MinimaProfile profile;
    profile.alpha = alpha;
    profile.regime = classify_regime(alpha);
    profile.bound = best;
    for (const auto& m : merged)
        if (m.value <= best + opts.value_merge) profile.minima.push_back(m);
    const auto half = profile.minima; // mirror into the second half-period
    for (const auto& m : half) profile.minima.push_back({m.theta + pi, m.value});
    std::sort(profile.minima.begin(), profile.minima.end(),
              [](const Minimum& a, const Minimum& b) { return a.theta < b.theta; });
    return profile;
}

// Optimal entropic bound min over states of S(A) + S(B), as a function of
// the inter-axis angle. Analytic in the two-minima regimes, numeric in the
// bifurcated regime; continuous across the regime boundaries.
inline double optimal_bound(double alpha, const SolverOptions& opts = {}) {
    require_alpha_in_range(alpha, "optimal_bound");
    switch (classify_regime(alpha)) {
    case Regime::TwoLow: return analytic_bound_low(alpha);
    case Regime::TwoHigh: return analytic_bound_high(alpha);
    case Regime::Four: return numeric_minima(alpha, opts).bound;
    }
    return 0.0; // unreachable
}

} // namespace entrobound

#endif
