#ifndef ENTROBOUND_GEOMETRY_HPP
#define ENTROBOUND_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entrobound/errors.hpp"

namespace entrobound {

// A direction in Euclidean 3-space (Bloch axis or Bloch state), norm 1.
// Construction normalizes; a (near-)zero input is rejected.
class UnitVector3 {
public:
    UnitVector3(double x, double y, double z) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n < 1e-12)
            throw DomainError("UnitVector3: zero-length direction");
        x_ = x / n;
        y_ = y / n;
        z_ = z / n;
    }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    double dot(const UnitVector3& o) const { return x_ * o.x_ + y_ * o.y_ + z_ * o.z_; }

    UnitVector3 negated() const { return UnitVector3(-x_, -y_, -z_); }

    double norm() const { return std::sqrt(x_ * x_ + y_ * y_ + z_ * z_); }

private:
    double x_, y_, z_;
};

// Affine-Pauli observable: offset*I + scale * sigma.axis.
// A pure multiple of the identity (scale == 0) has no measurement axis.
struct QubitObservable {
    QubitObservable(double offset_, double scale_, UnitVector3 axis_)
        : offset(offset_), scale(scale_), axis(axis_) {
        if (scale == 0.0)
            throw DomainError("QubitObservable: scale must be nonzero");
    }

    double offset;
    double scale;
    UnitVector3 axis;
};

// Axis in the eigenvalue-ordering convention: negated when scale < 0.
// Offset and positive rescaling leave the eigenbasis unchanged.
inline UnitVector3 canonical_axis(const QubitObservable& obs) {
    return obs.scale > 0 ? obs.axis : obs.axis.negated();
}

// |<a up | k up>|^2 = (1 + a.k)/2.
inline double overlap_probability(const UnitVector3& a, const UnitVector3& k) {
    return 0.5 * (1.0 + a.dot(k));
}

// Canonical planar frame for a pair of observables: angle alpha in [0, pi)
// plus an orthonormal basis (e1, e2) of the plane spanned by the two axes,
// with axis_A = e1 and axis_B = cos(alpha) e1 + sin(alpha) e2.
struct ObservablePairFrame {
    double alpha;
    UnitVector3 e1;
    UnitVector3 e2;
    bool degenerate_plane; // axes parallel or antiparallel; e2 chosen by fallback
};

namespace detail {

// Deterministic direction orthogonal to e1: component of +x (or +y when
// e1 is within ~1e-6 of +-x) orthogonal to e1, normalized.
inline UnitVector3 fallback_orthogonal(const UnitVector3& e1) {
    const double cx = 1.0 - e1.x() * e1.x();
    if (cx > 1e-12) {
        const double d = e1.x();
        return UnitVector3(1.0 - d * e1.x(), -d * e1.y(), -d * e1.z());
    }
    const double d = e1.y();
    return UnitVector3(-d * e1.x(), 1.0 - d * e1.y(), -d * e1.z());
}

} // namespace detail

// Reduces a pair of observables to the planar angle between their canonical
// axes, folded into [0, pi). Antiparallel axes fold to alpha = 0 (same
// eigenbasis). Parallel/antiparallel pairs set the degenerate flag and pick
// e2 by the deterministic fallback.
inline ObservablePairFrame pair_frame(const QubitObservable& obsA, const QubitObservable& obsB) {
    const UnitVector3 a = canonical_axis(obsA);
    const UnitVector3 b = canonical_axis(obsB);
    const double c = std::clamp(a.dot(b), -1.0, 1.0);

    if (std::abs(c) > 1.0 - 1e-12) {
        return ObservablePairFrame{0.0, a, detail::fallback_orthogonal(a), true};
    }

    const double alpha = std::acos(c);
    // Gram-Schmidt: e2 = normalize(b - (a.b) a).
    const UnitVector3 e2(b.x() - c * a.x(), b.y() - c * a.y(), b.z() - c * a.z());
    return ObservablePairFrame{alpha, a, e2, false};
}

// Bloch vector at planar angle theta: cos(theta) e1 + sin(theta) e2.
inline UnitVector3 state_on_plane(const ObservablePairFrame& frame, double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    return UnitVector3(ct * frame.e1.x() + st * frame.e2.x(),
                       ct * frame.e1.y() + st * frame.e2.y(),
                       ct * frame.e1.z() + st * frame.e2.z());
}

} // namespace entrobound

#endif
