#ifndef ENTROBOUND_BOUNDS_HPP
#define ENTROBOUND_BOUNDS_HPP

#include <algorithm>
#include <cmath>

#include "entrobound/errors.hpp"
#include "entrobound/solver.hpp"

namespace entrobound {

// Largest eigenvector overlap modulus for a qubit pair at angle alpha:
// max(cos(alpha/2), sin(alpha/2)).
inline double max_overlap(double alpha) {
    require_alpha_in_range(alpha, "max_overlap");
    return std::max(std::cos(0.5 * alpha), std::sin(0.5 * alpha));
}

// Deutsch bound: -2 ln((1 + c)/2) with c the maximal overlap.
inline double deutsch_bound(double alpha) {
    const double c = max_overlap(alpha);
    return -2.0 * std::log(0.5 * (1.0 + c));
}

// Maassen-Uffink bound: -2 ln c.
inline double maassen_uffink_bound(double alpha) {
    return -2.0 * std::log(max_overlap(alpha));
}

struct BoundReport {
    double alpha;
    double optimal;
    double maassen_uffink;
    double deutsch;
};

// All three bounds for one angle. The ordering deutsch <= maassen_uffink
// <= optimal is enforced within 1e-12 slack.
inline BoundReport bound_report(double alpha, const SolverOptions& opts = {}) {
    BoundReport r;
    r.alpha = alpha;
    r.optimal = optimal_bound(alpha, opts);
    r.maassen_uffink = maassen_uffink_bound(alpha);
    r.deutsch = deutsch_bound(alpha);
    if (r.deutsch > r.maassen_uffink + 1e-12 || r.maassen_uffink > r.optimal + 1e-12)
        throw ConvergenceFailure("bound_report: bound ordering violated");
    return r;
}

} // namespace entrobound

#endif
