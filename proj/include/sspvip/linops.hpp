#pragma once

#include "sspvip/lp_space.hpp"
#include "sspvip/rng.hpp"

namespace sspvip {

// Dense bounded linear operator A between two LpSpaces, with a certified
// upper bound on the operator norm and the generalized adjoint
//   A+ y = Jx^{-1}(A^T Jy(y)),
// which satisfies the defining identity [Ax, y]_Y = [x, A+ y]_X for all x.
// A+ is nonlinear whenever an exponent differs from 2; its "norm" is taken
// to be norm_upper, justified by ||A+ y|| <= ||A|| ||y||.
class BoundedLinearOp {
public:
    BoundedLinearOp(Mat matrix, LpSpace domain, LpSpace codomain);

    const Mat& matrix() const { return matrix_; }
    const LpSpace& domain() const { return domain_; }
    const LpSpace& codomain() const { return codomain_; }

    // certified upper bound on ||A||_{p1 -> p2}
    double norm_upper() const { return norm_upper_; }
    // empirical lower estimate, <= norm_upper
    double norm_lower() const { return norm_lower_; }

    Vec apply(const Vec& x) const;

    Vec generalized_adjoint_apply(const Vec& y) const;

    // Boyd-style power iteration for the p-norm, refreshed with the given
    // number of random restarts; tightens the stored lower estimate.
    double p_norm_lower_estimate(int samples, Rng& rng) const;

private:
    Mat matrix_;
    LpSpace domain_;
    LpSpace codomain_;
    double norm_upper_;
    mutable double norm_lower_;
};

// Certified upper bound on thel^{p1} -> l^{p2} operator norm of a dense
// matrix: Riesz-Thorin interpolation between the column-sum and row-sum
// norms, combined with finite-dimensional norm nesting when the exponents
// differ, and the spectral norm at p1 = p2 = 2.
double p_norm_upper_bound(const Mat& a, const LpSpace& domain, const LpSpace& codomain);

}  // namespace sspvip
