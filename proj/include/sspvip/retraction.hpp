#pragma once

#include "sspvip/lp_space.hpp"
#include "sspvip/rng.hpp"

#include <string>
#include <vector>

namespace sspvip {

enum class SetKind {
    WholeSpace,
    Box,
    NonnegativeOrthant,
    CoordinateSubspace,
    EuclideanBall,
};

// Closed convex set with a sunny nonexpansive retraction in l^p. The catalog
// is restricted to sets whose retraction acts coordinatewise with the
// sign-separation that makes [x - Qx, y - Qx] <= 0 provable for every p >= 2;
// the Euclidean ball is admitted only in p = 2 spaces, where the metric
// projection is the sunny nonexpansive retraction.
class ConvexSet {
public:
    static ConvexSet whole_space();
    static ConvexSet nonnegative_orthant();
    // bounds may contain +/-inf; lower <= upper with a nonempty interior of
    // finite feasible points required
    static ConvexSet box(Vec lower, Vec upper);
    // coordinates with mask[i] = true are constrained to zero
    static ConvexSet coordinate_subspace(std::vector<bool> mask);
    static ConvexSet euclidean_ball(const LpSpace& host, Vec center, double radius);

    SetKind kind() const { return kind_; }
    const Vec& lower() const { return lower_; }
    const Vec& upper() const { return upper_; }
    const std::vector<bool>& mask() const { return mask_; }
    const Vec& center() const { return center_; }
    double radius() const { return radius_; }

    // the sunny nonexpansive retraction Q_C
    Vec retract(const LpSpace& space, const Vec& x) const;

    bool contains(const LpSpace& space, const Vec& x, double tol = 0.0) const;

    // a canonical feasible point, used as sampling anchor
    Vec anchor(const LpSpace& space) const;

    std::string describe() const;

private:
    ConvexSet() = default;
    void check_space(const LpSpace& space) const;

    SetKind kind_ = SetKind::WholeSpace;
    Vec lower_, upper_;       // Box
    std::vector<bool> mask_;  // CoordinateSubspace
    Vec center_;              // EuclideanBall
    double radius_ = 0.0;     // EuclideanBall
};

// Sampled verification of the sunny nonexpansive characterization:
//   (ii)   ||Qx - Qy||^2 <= [x - y, Qx - Qy]
//   (iii)  [x - Qx, y - Qx] <= 0           for y in C
// plus nonexpansiveness, the sunny identity Q(Qx + t(x - Qx)) = Qx for
// t in {0, 0.5, 1, 2, 10}, idempotence, and that points of C are fixed.
struct RetractionReport {
    int trials = 0;
    double violation_ii = 0.0;
    double violation_iii = 0.0;
    double violation_nonexpansive = 0.0;
    double violation_sunny = 0.0;
    double violation_idempotent = 0.0;
    double violation_fixes_set = 0.0;

    double max_violation() const;
    bool ok(double tol) const { return max_violation() <= tol; }
};

RetractionReport verify_sunny_nonexpansive(const ConvexSet& set, const LpSpace& space,
                                           int trials, Rng& rng);

}  // namespace sspvip
