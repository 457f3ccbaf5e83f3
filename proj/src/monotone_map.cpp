#include "sspvip/monotone_map.hpp"

#include <cmath>
#include <limits>

namespace sspvip {

MonotoneMap MonotoneMap::affine_scalar(double gain, Vec shift) {
    require(std::isfinite(gain) && gain > 0.0, "affine_scalar: gain must be positive");
    require_finite(shift, "affine_scalar");
    MonotoneMap m;
    m.kind_ = MapKind::AffineScalar;
    m.gain_ = gain;
    m.alpha_ = gain;
    m.beta_ = gain;
    m.shift_ = std::move(shift);
    return m;
}

MonotoneMap MonotoneMap::diagonal_affine(Vec diag, Vec shift) {
    require(diag.size() == shift.size(), "diagonal_affine: diag/shift sizes differ");
    require_finite(diag, "diagonal_affine");
    require_finite(shift, "diagonal_affine");
    require(diag.minCoeff() > 0.0, "diagonal_affine: diagonal must be positive");
    MonotoneMap m;
    m.kind_ = MapKind::DiagonalAffine;
    m.alpha_ = diag.minCoeff();
    m.beta_ = diag.maxCoeff();
    m.diag_ = std::move(diag);
    m.shift_ = std::move(shift);
    return m;
}

MonotoneMap MonotoneMap::componentwise(double alpha, double beta, Vec shift) {
    require(std::isfinite(alpha) && std::isfinite(beta), "componentwise: non-finite modulus");
    require(alpha > 0.0, "componentwise: alpha must be positive");
    require(beta >= alpha, "componentwise: beta must be >= alpha");
    require_finite(shift, "componentwise");
    MonotoneMap m;
    m.kind_ = MapKind::ComponentwiseMonotone;
    m.alpha_ = alpha;
    m.beta_ = beta;
    m.shift_ = std::move(shift);
    return m;
}

Vec MonotoneMap::evaluate(const Vec& x) const {
    require(x.size() == shift_.size(), "MonotoneMap::evaluate: dimension mismatch");
    require_finite(x, "MonotoneMap::evaluate");
    switch (kind_) {
        case MapKind::AffineScalar:
            return gain_ * x + shift_;
        case MapKind::DiagonalAffine:
            return diag_.cwiseProduct(x) + shift_;
        case MapKind::ComponentwiseMonotone: {
            Vec r(x.size());
            for (Index i = 0; i < x.size(); ++i) {
                double t = x[i];
                r[i] = alpha_ * t + 0.5 * (beta_ - alpha_) * (t + std::sin(t)) + shift_[i];
            }
            return r;
        }
    }
    throw StructuralError("MonotoneMap::evaluate: unknown kind");
}

MonotoneMap MonotoneMap::vanishing_at(const Vec& root) const {
    MonotoneMap m = *this;
    m.shift_ = shift_ - evaluate(root);
    return m;
}

namespace {
bool same_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}
}  // namespace

bool MonotoneMap::operator==(const MonotoneMap& other) const {
    return kind_ == other.kind_ && alpha_ == other.alpha_ && beta_ == other.beta_ &&
           gain_ == other.gain_ && same_vec(diag_, other.diag_) && same_vec(shift_, other.shift_);
}

std::string MonotoneMap::describe() const {
    switch (kind_) {
        case MapKind::AffineScalar: return "affine_scalar";
        case MapKind::DiagonalAffine: return "diagonal_affine";
        case MapKind::ComponentwiseMonotone: return "componentwise";
    }
    return "?";
}

std::pair<double, double> estimate_moduli(const MonotoneMap& map, const LpSpace& space,
                                          int trials, Rng& rng) {
    require(trials >= 2, "estimate_moduli: trials must be >= 2");
    require(map.dim() == space.dim(), "estimate_moduli: map/space dimension mismatch");
    double alpha_est = std::numeric_limits<double>::infinity();
    double beta_est = 0.0;
    for (int t = 0; t < trials; ++t) {
        Vec x = 3.0 * rng.normal_vec(space.dim());
        // mix global pairs with short-range ones so slope extremes are seen
        Vec y = (t % 2 == 0) ? Vec(3.0 * rng.normal_vec(space.dim()))
                             : Vec(x + 1e-4 * rng.normal_vec(space.dim()));
        if ((x - y).isZero()) continue;
        Vec dF = map.evaluate(x) - map.evaluate(y);
        double dn = space.norm(x - y);
        alpha_est = std::min(alpha_est, space.sip(dF, x - y) / (dn * dn));
        beta_est = std::max(beta_est, space.norm(dF) / dn);
    }
    return {alpha_est, beta_est};
}

}  // namespace sspvip
