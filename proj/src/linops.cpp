#include "sspvip/linops.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace sspvip {

namespace {

// dual vector of v with respect to the exponent e:
// psi_i = sgn(v_i) (|v_i| / ||v||_e)^{e-1}, so <v, psi> = ||v||_e and the
// conjugate-exponent norm of psi is 1
Vec dual_vector(const Vec& v, double e) {
    double n = pnorm(v, e);
    Vec psi = Vec::Zero(v.size());
    if (n == 0.0) return psi;
    for (Index i = 0; i < v.size(); ++i) psi[i] = signed_pow(v[i] / n, e - 1.0);
    return psi;
}

double col_sum_norm(const Mat& a) {  // ||A||_{1->1}
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

double row_sum_norm(const Mat& a) {  // ||A||_{inf->inf}
    return a.cwiseAbs().rowwise().sum().maxCoeff();
}

// Riesz-Thorin: ||A||_{e->e} <= ||A||_1^{1/e} ||A||_inf^{1-1/e}
double interpolated_bound(const Mat& a, double e) {
    double n1 = col_sum_norm(a);
    double ninf = row_sum_norm(a);
    if (n1 == 0.0 || ninf == 0.0) return 0.0;
    return std::pow(n1, 1.0 / e) * std::pow(ninf, 1.0 - 1.0 / e);
}

// Boyd/Higham power iteration for ||A||_{p1 -> p2}; returns a lower bound
// (every visited ratio ||Ax|| / ||x|| is one)
double boyd_iterate(const Mat& a, double p1, double p2, Vec x, int maxit) {
    double q1 = p1 / (p1 - 1.0);
    double best = 0.0;
    double nx = pnorm(x, p1);
    if (nx == 0.0) return 0.0;
    x /= nx;
    for (int k = 0; k < maxit; ++k) {
        Vec y = a * x;
        double est = pnorm(y, p2);
        best = std::max(best, est);
        if (est == 0.0) break;
        Vec z = a.transpose() * dual_vector(y, p2);
        double zq = pnorm(z, q1);
        if (zq <= z.dot(x) * (1.0 + 1e-14)) break;  // stationary point
        x = dual_vector(z, q1);
    }
    return best;
}

}  // namespace

double p_norm_upper_bound(const Mat& a, const LpSpace& domain, const LpSpace& codomain) {
    require(a.allFinite(), "p_norm_upper_bound: non-finite matrix entry");
    if (col_sum_norm(a) == 0.0) return 0.0;
    const double p1 = domain.p();
    const double p2 = codomain.p();

    // route through the domain exponent: ||Ax||_{p2} vs ||Ax||_{p1}
    double via_p1 = interpolated_bound(a, p1);
    if (p2 < p1) via_p1 *= std::pow(static_cast<double>(codomain.dim()), 1.0 / p2 - 1.0 / p1);

    // route through the codomain exponent: ||x||_{p2} vs ||x||_{p1}
    double via_p2 = interpolated_bound(a, p2);
    if (p2 < p1) via_p2 *= std::pow(static_cast<double>(domain.dim()), 1.0 / p2 - 1.0 / p1);

    double bound = std::min(via_p1, via_p2);

    if (p1 == 2.0 && p2 == 2.0) {
        double spectral = a.jacobiSvd().singularValues()(0);
        bound = std::min(bound, spectral * (1.0 + 1e-12));
    }
    return bound;
}

BoundedLinearOp::BoundedLinearOp(Mat matrix, LpSpace domain, LpSpace codomain)
    : matrix_(std::move(matrix)), domain_(domain), codomain_(codomain) {
    require(matrix_.cols() == domain_.dim(), "BoundedLinearOp: cols != domain dim");
    require(matrix_.rows() == codomain_.dim(), "BoundedLinearOp: rows != codomain dim");
    require(matrix_.allFinite(), "BoundedLinearOp: non-finite matrix entry");
    norm_upper_ = p_norm_upper_bound(matrix_, domain_, codomain_);
    norm_lower_ = std::min(
        boyd_iterate(matrix_, domain_.p(), codomain_.p(), Vec::Ones(domain_.dim()), 100),
        norm_upper_);
}

Vec BoundedLinearOp::apply(const Vec& x) const {
    require(x.size() == domain_.dim(), "apply: dimension mismatch");
    return matrix_ * x;
}

Vec BoundedLinearOp::generalized_adjoint_apply(const Vec& y) const {
    require(y.size() == codomain_.dim(), "generalized_adjoint_apply: dimension mismatch");
    if (domain_.is_hilbert() && codomain_.is_hilbert()) return matrix_.transpose() * y;
    return domain_.inverse_duality_map(matrix_.transpose() * codomain_.duality_map(y));
}

double BoundedLinearOp::p_norm_lower_estimate(int samples, Rng& rng) const {
    require(samples >= 1, "p_norm_lower_estimate: samples must be >= 1");
    double best = boyd_iterate(matrix_, domain_.p(), codomain_.p(), Vec::Ones(domain_.dim()), 100);
    for (int s = 0; s < samples; ++s) {
        Vec x0 = rng.normal_vec(domain_.dim());
        best = std::max(best, boyd_iterate(matrix_, domain_.p(), codomain_.p(), x0, 100));
    }
    best = std::min(best, norm_upper_);
    norm_lower_ = std::max(norm_lower_, best);
    return best;
}

}  // namespace sspvip
