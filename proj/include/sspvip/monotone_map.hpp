#pragma once

#include "sspvip/lp_space.hpp"
#include "sspvip/rng.hpp"

#include <string>
#include <utility>

namespace sspvip {

enum class MapKind {
    AffineScalar,         // F(x) = a x + shift
    DiagonalAffine,       // F(x) = d .* x + shift
    ComponentwiseMonotone // F(x)_i = phi(x_i) + shift_i, phi' in [alpha, beta]
};

// Monotone map with certified moduli: alpha-strongly monotone and
// beta-Lipschitz in every l^p, p >= 2. The catalog is componentwise, so the
// moduli follow from slopes: for phi with phi' in [alpha, beta],
//   [Fx - Fy, x - y] = ||x-y||^{2-p} sum_i s_i (x_i-y_i)^2 |x_i-y_i|^{p-2}
// with mean slopes s_i in [alpha, beta], which is pinched between
// alpha ||x-y||^2 and beta ||x-y||^2.
class MonotoneMap {
public:
    static MonotoneMap affine_scalar(double gain, Vec shift);
    static MonotoneMap diagonal_affine(Vec diag, Vec shift);
    // phi(t) = alpha t + (beta - alpha) (t + sin t) / 2
    static MonotoneMap componentwise(double alpha, double beta, Vec shift);

    MapKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gain() const { return gain_; }
    const Vec& diag() const { return diag_; }
    const Vec& shift() const { return shift_; }
    Index dim() const { return shift_.size(); }

    Vec evaluate(const Vec& x) const;

    // same map with the shift adjusted so that evaluate(root) == 0
    MonotoneMap vanishing_at(const Vec& root) const;

    bool operator==(const MonotoneMap& other) const;

    std::string describe() const;

private:
    MonotoneMap() = default;

    MapKind kind_ = MapKind::AffineScalar;
    double alpha_ = 1.0;
    double beta_ = 1.0;
    double gain_ = 1.0;  // AffineScalar
    Vec diag_;           // DiagonalAffine
    Vec shift_;
};

// Brute-force moduli estimator over random pairs:
//   alpha_est = min [Fx - Fy, x - y] / ||x - y||^2
//   beta_est  = max ||Fx - Fy|| / ||x - y||
// Declared moduli must bracket: alpha_est >= alpha - tol, beta_est <= beta + tol.
std::pair<double, double> estimate_moduli(const MonotoneMap& map, const LpSpace& space,
                                          int trials, Rng& rng);

}  // namespace sspvip
