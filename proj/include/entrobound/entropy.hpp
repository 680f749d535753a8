#ifndef ENTROBOUND_ENTROPY_HPP
#define ENTROBOUND_ENTROPY_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entrobound/errors.hpp"
#include "entrobound/geometry.hpp"

namespace entrobound {

inline constexpr double ln2 = std::numbers::ln2;

// Window around the points where the closed-form derivatives of the
// entropy sum diverge (an H0 argument hitting +-1).
inline constexpr double derivative_singular_window = 1e-9;

namespace detail {

// -p ln p with the continuity convention 0 ln 0 = 0. Branching on a tiny
// threshold instead of clamping avoids spurious negative entropies.
inline double neg_p_log_p(double p) {
    return p < 1e-300 ? 0.0 : -p * std::log(p);
}

// Distance of t from the nearest multiple of pi.
inline double dist_to_multiple_of_pi(double t) {
    const double r = std::remainder(t, std::numbers::pi);
    return std::abs(r);
}

} // namespace detail

// Binary entropy H0(x) of the two-outcome distribution ((1-x)/2, (1+x)/2),
// in nats. Even in x; exactly 0 at x = +-1; maximum ln 2 at x = 0.
inline double binary_entropy(double x) {
    if (std::abs(x) > 1.0 + 1e-12)
        throw DomainError("binary_entropy: |x| > 1");
    x = std::clamp(x, -1.0, 1.0);
    return detail::neg_p_log_p(0.5 * (1.0 - x)) + detail::neg_p_log_p(0.5 * (1.0 + x));
}

// Shannon entropy of measuring sigma.axis in the pure state with Bloch
// vector `state`: H0(axis . state).
inline double shannon_entropy(const UnitVector3& axis, const UnitVector3& state) {
    return binary_entropy(axis.dot(state));
}

// Planar entropy-sum objective f(theta; alpha) = H0(cos theta) + H0(cos(alpha - theta)).
inline double entropy_sum(double theta, double alpha) {
    return binary_entropy(std::cos(theta)) + binary_entropy(std::cos(alpha - theta));
}

namespace detail {

inline void check_nonsingular(double theta, double alpha) {
    if (dist_to_multiple_of_pi(theta) < derivative_singular_window ||
        dist_to_multiple_of_pi(alpha - theta) < derivative_singular_window)
        throw NearSingular("entropy_sum derivative evaluated too close to an eigenstate point");
}

// d/dt H0(cos t) = (sin t / 2) ln[(1 + cos t)/(1 - cos t)].
inline double d_h0_cos(double t) {
    const double c = std::cos(t);
    return 0.5 * std::sin(t) * std::log((1.0 + c) / (1.0 - c));
}

// d^2/dt^2 H0(cos t) = (cos t / 2) ln[(1 + cos t)/(1 - cos t)] - 1.
inline double d2_h0_cos(double t) {
    const double c = std::cos(t);
    return 0.5 * c * std::log((1.0 + c) / (1.0 - c)) - 1.0;
}

} // namespace detail

// First theta-derivative of entropy_sum, closed form. Vanishes at
// theta = alpha/2 and theta = pi + alpha/2 by symmetry.
inline double entropy_sum_d1(double theta, double alpha) {
    detail::check_nonsingular(theta, alpha);
    return detail::d_h0_cos(theta) - detail::d_h0_cos(alpha - theta);
}

// Second theta-derivative of entropy_sum, closed form.
inline double entropy_sum_d2(double theta, double alpha) {
    detail::check_nonsingular(theta, alpha);
    return detail::d2_h0_cos(theta) + detail::d2_h0_cos(alpha - theta);
}

// True when the closed-form derivatives are defined at theta.
inline bool derivatives_defined(double theta, double alpha) {
    return detail::dist_to_multiple_of_pi(theta) >= derivative_singular_window &&
           detail::dist_to_multiple_of_pi(alpha - theta) >= derivative_singular_window;
}

} // namespace entrobound

#endif
