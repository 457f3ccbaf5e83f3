#include "sspvip/instance.hpp"

#include <algorithm>
#include <cmath>

namespace sspvip {

std::array<double, 4> residuals(const SspvipInstance& inst, const Vec& x1, const Vec& y1,
                                double lambda, double gamma) {
    require(lambda > 0.0, "residuals: lambda must be positive");
    require(gamma > 0.0, "residuals: gamma must be positive");
    const LpSpace& s1 = inst.space1;
    const LpSpace& s2 = inst.space2;
    const Vec x2 = inst.A.apply(x1);
    const Vec y2 = inst.A.apply(y1);
    double r1 = s1.norm(x1 - inst.set1.retract(s1, y1 - lambda * inst.F.evaluate(y1)));
    double r2 = s2.norm(x2 - inst.set2.retract(s2, y2 - gamma * inst.f.evaluate(y2)));
    double r3 = s1.norm(y1 - inst.set1.retract(s1, x1 - lambda * inst.G.evaluate(x1)));
    double r4 = s2.norm(y2 - inst.set2.retract(s2, x2 - gamma * inst.g.evaluate(x2)));
    return {r1, r2, r3, r4};
}

namespace {

MonotoneMap make_map(double alpha, double beta, Index dim) {
    require(alpha > 0.0 && beta >= alpha, "generate_instance: need 0 < alpha <= beta");
    if (beta == alpha) return MonotoneMap::diagonal_affine(Vec::Constant(dim, alpha), Vec::Zero(dim));
    return MonotoneMap::componentwise(alpha, beta, Vec::Zero(dim));
}

std::vector<bool> random_mask(Index dim, Rng& rng) {
    std::vector<bool> mask(static_cast<size_t>(dim));
    bool any_free = false;
    for (auto&& m : mask) {
        m = rng.uniform() < 0.35;
        if (!m) any_free = true;
    }
    if (!any_free) mask.front() = false;
    return mask;
}

}  // namespace

SspvipInstance generate_instance(const GeneratorParams& params) {
    Rng rng(params.seed);
    LpSpace space1(params.dim1, params.p1);
    LpSpace space2(params.dim2, params.p2);

    const bool want_nonneg = params.set2 == SetKind::NonnegativeOrthant;

    // operator first; codomain-side set constraints shape it
    Mat a = rng.normal_mat(params.dim2, params.dim1);
    a /= std::sqrt(static_cast<double>(params.dim1)) + std::sqrt(static_cast<double>(params.dim2));
    if (want_nonneg) a = a.cwiseAbs();
    std::vector<bool> mask2;
    if (params.set2 == SetKind::CoordinateSubspace) {
        mask2 = random_mask(params.dim2, rng);
        for (Index i = 0; i < params.dim2; ++i)
            if (mask2[static_cast<size_t>(i)]) a.row(i).setZero();
    }

    // solution point u, feasible for C1 (and nonnegative when C2 is the orthant)
    ConvexSet set1 = ConvexSet::whole_space();
    Vec u;
    switch (params.set1) {
        case SetKind::WholeSpace: {
            u = rng.normal_vec(params.dim1);
            if (want_nonneg) u = u.cwiseAbs();
            break;
        }
        case SetKind::Box: {
            Vec c = rng.normal_vec(params.dim1);
            if (want_nonneg) c = c.cwiseAbs();
            Vec wl = rng.uniform_vec(params.dim1, 0.5, 1.5);
            Vec wu = rng.uniform_vec(params.dim1, 0.5, 1.5);
            Vec lower = c - wl;
            if (want_nonneg) lower = lower.cwiseMax(0.0);
            set1 = ConvexSet::box(lower, c + wu);
            u = c;
            break;
        }
        case SetKind::NonnegativeOrthant: {
            set1 = ConvexSet::nonnegative_orthant();
            u = rng.normal_vec(params.dim1).cwiseAbs();
            break;
        }
        case SetKind::CoordinateSubspace: {
            auto mask1 = random_mask(params.dim1, rng);
            set1 = ConvexSet::coordinate_subspace(mask1);
            u = rng.normal_vec(params.dim1);
            if (want_nonneg) u = u.cwiseAbs();
            for (Index i = 0; i < params.dim1; ++i)
                if (mask1[static_cast<size_t>(i)]) u[i] = 0.0;
            break;
        }
        case SetKind::EuclideanBall: {
            double radius = rng.uniform(1.0, 2.0);
            Vec center = rng.normal_vec(params.dim1);
            if (want_nonneg) center = center.cwiseAbs() + Vec::Constant(params.dim1, radius);
            set1 = ConvexSet::euclidean_ball(space1, center, radius);
            Vec dir = rng.normal_vec(params.dim1);
            double dn = dir.norm();
            if (dn == 0.0) dir.setZero(); else dir /= dn;
            u = center + (0.7 * radius * rng.uniform()) * dir;
            if (want_nonneg) u = u.cwiseMax(0.0);  // ball sits inside the orthant already
            break;
        }
    }

    const Vec v = a * u;

    ConvexSet set2 = ConvexSet::whole_space();
    switch (params.set2) {
        case SetKind::WholeSpace:
            break;
        case SetKind::Box: {
            Vec wl = rng.uniform_vec(params.dim2, 0.5, 1.5);
            Vec wu = rng.uniform_vec(params.dim2, 0.5, 1.5);
            set2 = ConvexSet::box(v - wl, v + wu);
            break;
        }
        case SetKind::NonnegativeOrthant:
            set2 = ConvexSet::nonnegative_orthant();
            break;
        case SetKind::CoordinateSubspace:
            set2 = ConvexSet::coordinate_subspace(mask2);
            break;
        case SetKind::EuclideanBall: {
            double radius = rng.uniform(1.0, 2.0);
            Vec dir = rng.normal_vec(params.dim2);
            double dn = dir.norm();
            if (dn == 0.0) dir.setZero(); else dir /= dn;
            set2 = ConvexSet::euclidean_ball(space2, v + (0.3 * radius) * dir, radius);
            break;
        }
    }

    const Moduli& md = params.moduli;
    SspvipInstance inst{
        space1,
        space2,
        set1,
        set2,
        make_map(md.alpha1, md.beta1, params.dim1).vanishing_at(u),
        make_map(md.alpha2, md.beta2, params.dim1).vanishing_at(u),
        make_map(md.sigma1, md.eta1, params.dim2).vanishing_at(v),
        make_map(md.sigma2, md.eta2, params.dim2).vanishing_at(v),
        BoundedLinearOp(a, space1, space2),
        std::make_pair(u, u),
        params.seed,
    };

    require(inst.set1.contains(space1, u, 1e-12), "generate_instance: u not in C1");
    require(inst.set2.contains(space2, v, 1e-12), "generate_instance: A u not in C2");
    require(known_solution_residual(inst, 1.0, 1.0) <= 1e-10,
            "generate_instance: residuals do not vanish at the known solution");
    return inst;
}

double known_solution_residual(const SspvipInstance& inst, double lambda, double gamma) {
    require(inst.known_solution.has_value(), "known_solution_residual: no known solution");
    auto [xs, ys] = *inst.known_solution;
    auto r = residuals(inst, xs, ys, lambda, gamma);
    return *std::max_element(r.begin(), r.end());
}

SetKind set_kind_from_name(const std::string& name) {
    if (name == "whole") return SetKind::WholeSpace;
    if (name == "box") return SetKind::Box;
    if (name == "orthant") return SetKind::NonnegativeOrthant;
    if (name == "subspace") return SetKind::CoordinateSubspace;
    if (name == "ball") return SetKind::EuclideanBall;
    throw StructuralError("unknown set kind '" + name +
                          "' (expected whole|box|orthant|subspace|ball)");
}

std::string set_kind_name(SetKind kind) {
    switch (kind) {
        case SetKind::WholeSpace: return "whole";
        case SetKind::Box: return "box";
        case SetKind::NonnegativeOrthant: return "orthant";
        case SetKind::CoordinateSubspace: return "subspace";
        case SetKind::EuclideanBall: return "ball";
    }
    return "?";
}

}  // namespace sspvip
