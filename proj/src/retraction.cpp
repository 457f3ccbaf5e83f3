#include "sspvip/retraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sspvip {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ConvexSet ConvexSet::whole_space() {
    ConvexSet s;
    s.kind_ = SetKind::WholeSpace;
    return s;
}

ConvexSet ConvexSet::nonnegative_orthant() {
    ConvexSet s;
    s.kind_ = SetKind::NonnegativeOrthant;
    return s;
}

ConvexSet ConvexSet::box(Vec lower, Vec upper) {
    require(lower.size() == upper.size(), "box: bound sizes differ");
    for (Index i = 0; i < lower.size(); ++i) {
        require(!std::isnan(lower[i]) && !std::isnan(upper[i]), "box: NaN bound");
        require(lower[i] <= upper[i], "box: lower > upper");
        require(lower[i] < kInf && upper[i] > -kInf, "box: no feasible point");
    }
    ConvexSet s;
    s.kind_ = SetKind::Box;
    s.lower_ = std::move(lower);
    s.upper_ = std::move(upper);
    return s;
}

ConvexSet ConvexSet::coordinate_subspace(std::vector<bool> mask) {
    require(!mask.empty(), "coordinate_subspace: empty mask");
    ConvexSet s;
    s.kind_ = SetKind::CoordinateSubspace;
    s.mask_ = std::move(mask);
    return s;
}

ConvexSet ConvexSet::euclidean_ball(const LpSpace& host, Vec center, double radius) {
    require(host.is_hilbert(), "euclidean_ball: host space must have p = 2");
    require(center.size() == host.dim(), "euclidean_ball: center dimension mismatch");
    require_finite(center, "euclidean_ball");
    require(radius > 0.0 && std::isfinite(radius), "euclidean_ball: radius must be positive");
    ConvexSet s;
    s.kind_ = SetKind::EuclideanBall;
    s.center_ = std::move(center);
    s.radius_ = radius;
    return s;
}

void ConvexSet::check_space(const LpSpace& space) const {
    switch (kind_) {
        case SetKind::Box:
            require(lower_.size() == space.dim(), "box: hosted in wrong dimension");
            break;
        case SetKind::CoordinateSubspace:
            require(static_cast<Index>(mask_.size()) == space.dim(),
                    "coordinate_subspace: hosted in wrong dimension");
            break;
        case SetKind::EuclideanBall:
            require(center_.size() == space.dim(), "euclidean_ball: hosted in wrong dimension");
            require(space.is_hilbert(), "euclidean_ball: host space must have p = 2");
            break;
        default:
            break;
    }
}

Vec ConvexSet::retract(const LpSpace& space, const Vec& x) const {
    check_space(space);
    require(x.size() == space.dim(), "retract: dimension mismatch");
    require_finite(x, "retract");
    switch (kind_) {
        case SetKind::WholeSpace:
            return x;
        case SetKind::Box:
            return x.cwiseMax(lower_).cwiseMin(upper_);
        case SetKind::NonnegativeOrthant:
            return x.cwiseMax(0.0);
        case SetKind::CoordinateSubspace: {
            Vec r = x;
            for (Index i = 0; i < r.size(); ++i)
                if (mask_[static_cast<size_t>(i)]) r[i] = 0.0;
            return r;
        }
        case SetKind::EuclideanBall: {
            Vec d = x - center_;
            double n = d.norm();
            // the relative band keeps the retraction exactly idempotent:
            // a point scaled onto the sphere re-measures within it
            if (n <= radius_ * (1.0 + 1e-12)) return x;
            return center_ + (radius_ / n) * d;
        }
    }
    throw StructuralError("retract: unknown set kind");
}

bool ConvexSet::contains(const LpSpace& space, const Vec& x, double tol) const {
    Vec r = retract(space, x);
    return (x - r).cwiseAbs().maxCoeff() <= tol;
}

Vec ConvexSet::anchor(const LpSpace& space) const {
    check_space(space);
    return retract(space, Vec::Zero(space.dim()));
}

std::string ConvexSet::describe() const {
    switch (kind_) {
        case SetKind::WholeSpace: return "whole";
        case SetKind::Box: return "box";
        case SetKind::NonnegativeOrthant: return "orthant";
        case SetKind::CoordinateSubspace: return "subspace";
        case SetKind::EuclideanBall: return "ball";
    }
    return "?";
}

double RetractionReport::max_violation() const {
    return std::max({violation_ii, violation_iii, violation_nonexpansive, violation_sunny,
                     violation_idempotent, violation_fixes_set});
}

RetractionReport verify_sunny_nonexpansive(const ConvexSet& set, const LpSpace& space,
                                           int trials, Rng& rng) {
    require(trials >= 1, "verify_sunny_nonexpansive: trials must be >= 1");
    RetractionReport rep;
    rep.trials = trials;
    const Vec anchor = set.anchor(space);
    const double sunny_ts[] = {0.0, 0.5, 1.0, 2.0, 10.0};
    for (int t = 0; t < trials; ++t) {
        Vec x = anchor + 2.0 * rng.normal_vec(space.dim());
        Vec y = anchor + 2.0 * rng.normal_vec(space.dim());
        Vec qx = set.retract(space, x);
        Vec qy = set.retract(space, y);
        Vec yc = set.retract(space, anchor + 2.0 * rng.normal_vec(space.dim()));

        // ||Qx - Qy||^2 computed as [Qx - Qy, Qx - Qy], the induced norm
        Vec w = qx - qy;
        rep.violation_ii = std::max(rep.violation_ii, space.sip(w, w) - space.sip(x - y, w));
        double d = space.norm(w);
        rep.violation_iii = std::max(rep.violation_iii, space.sip(x - qx, yc - qx));
        rep.violation_nonexpansive = std::max(rep.violation_nonexpansive, d - space.norm(x - y));
        for (double s : sunny_ts) {
            Vec ray = qx + s * (x - qx);
            rep.violation_sunny =
                std::max(rep.violation_sunny, space.norm(set.retract(space, ray) - qx));
        }
        rep.violation_idempotent =
            std::max(rep.violation_idempotent, space.norm(set.retract(space, qx) - qx));
        rep.violation_fixes_set =
            std::max(rep.violation_fixes_set, space.norm(set.retract(space, yc) - yc));
    }
    return rep;
}

}  // namespace sspvip
