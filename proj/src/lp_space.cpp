#include "sspvip/lp_space.hpp"

#include <cmath>

namespace sspvip {

LpSpace::LpSpace(Index dim, double p) : dim_(dim), p_(p) {
    require(dim >= 1, "LpSpace: dim must be >= 1");
    require(std::isfinite(p), "LpSpace: p must be finite");
    require(p >= 2.0, "LpSpace: p must be >= 2 (2-uniformly smooth regime)");
    q_ = p / (p - 1.0);
    c_ = p - 1.0;
}

void LpSpace::check_dim(const Vec& x, const char* what) const {
    require(x.size() == dim_, std::string(what) + ": dimension mismatch");
}

double pnorm(const Vec& x, double e) {
    if (e == 2.0) return std::sqrt(x.squaredNorm());
    double m = x.cwiseAbs().maxCoeff();
    if (m == 0.0) return 0.0;
    double sum = 0.0;
    for (Index i = 0; i < x.size(); ++i) {
        double t = std::abs(x[i]) / m;
        if (t != 0.0) sum += std::pow(t, e);
    }
    return m * std::pow(sum, 1.0 / e);
}

double LpSpace::norm(const Vec& x) const {
    check_dim(x, "norm");
    require_finite(x, "norm");
    return pnorm(x, p_);
}

double LpSpace::sip(const Vec& x, const Vec& y) const {
    check_dim(x, "sip");
    check_dim(y, "sip");
    require_finite(x, "sip");
    require_finite(y, "sip");
    if (p_ == 2.0) return x.dot(y);
    double ny = pnorm(y, p_);
    if (ny == 0.0) return 0.0;
    // [x,y] = ny * sum_i x_i * sgn(yh_i) |yh_i|^{p-1}, with yh = y / ny
    double sum = 0.0;
    for (Index i = 0; i < dim_; ++i) {
        if (y[i] != 0.0) sum += x[i] * signed_pow(y[i] / ny, p_ - 1.0);
    }
    return ny * sum;
}

Vec LpSpace::duality_map(const Vec& y) const {
    check_dim(y, "duality_map");
    require_finite(y, "duality_map");
    if (p_ == 2.0) return y;
    double ny = pnorm(y, p_);
    Vec j = Vec::Zero(dim_);
    if (ny == 0.0) return j;
    for (Index i = 0; i < dim_; ++i) j[i] = ny * signed_pow(y[i] / ny, p_ - 1.0);
    return j;
}

Vec LpSpace::inverse_duality_map(const Vec& u) const {
    check_dim(u, "inverse_duality_map");
    require_finite(u, "inverse_duality_map");
    if (p_ == 2.0) return u;
    double nu = pnorm(u, q_);
    Vec z = Vec::Zero(dim_);
    if (nu == 0.0) return z;
    for (Index i = 0; i < dim_; ++i) z[i] = nu * signed_pow(u[i] / nu, q_ - 1.0);
    return z;
}

}  // namespace sspvip
