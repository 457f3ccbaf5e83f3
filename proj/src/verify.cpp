#include "sspvip/verify.hpp"

#include "sspvip/retraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sspvip {

namespace {

double rel_gap(double lhs, double rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

double rel_excess(double lhs, double rhs, double scale) {
    return std::max(0.0, lhs - rhs) / (1.0 + std::abs(scale));
}

}  // namespace

double SipAxiomViolations::max_violation() const {
    return std::max({additivity, homogeneity_first, positivity, cauchy_schwarz,
                     homogeneity_second, norm_consistency});
}

SipAxiomViolations check_sip_axioms(const LpSpace& space, int draws, Rng& rng) {
    SipAxiomViolations v;
    for (int t = 0; t < draws; ++t) {
        Vec x = rng.normal_vec(space.dim());
        Vec y = rng.normal_vec(space.dim());
        Vec z = rng.normal_vec(space.dim());
        double lam = rng.uniform(-3.0, 3.0);

        v.additivity = std::max(
            v.additivity, rel_gap(space.sip(x + y, z), space.sip(x, z) + space.sip(y, z)));
        v.homogeneity_first = std::max(
            v.homogeneity_first, rel_gap(space.sip(lam * x, y), lam * space.sip(x, y)));
        double sxx = space.sip(x, x);
        if (!x.isZero(0.0)) {
            v.positivity = std::max(v.positivity, sxx > 0.0 ? 0.0 : 1.0);
        }
        double sxy = space.sip(x, y);
        double syy = space.sip(y, y);
        v.cauchy_schwarz =
            std::max(v.cauchy_schwarz, rel_excess(sxy * sxy, sxx * syy, sxx * syy));
        // modulus homogeneity |[x, t y]| = |t| |[x, y]|; the signed identity
        // [x, t y] = t [x, y] holds as well and is checked for t >= 0, where
        // the two coincide
        v.homogeneity_second = std::max(
            v.homogeneity_second,
            rel_gap(std::abs(space.sip(x, lam * y)), std::abs(lam) * std::abs(sxy)));
        double tnn = std::abs(lam);
        v.homogeneity_second =
            std::max(v.homogeneity_second, rel_gap(space.sip(x, tnn * y), tnn * sxy));
        double nx = space.norm(x);
        v.norm_consistency = std::max(v.norm_consistency, rel_gap(sxx, nx * nx));
    }
    return v;
}

double check_smoothness_inequality(const LpSpace& space, int draws, Rng& rng) {
    const double c = space.smoothness_constant();
    double worst = 0.0;
    for (int t = 0; t < draws; ++t) {
        Vec x = rng.normal_vec(space.dim());
        Vec y = rng.normal_vec(space.dim());
        double nxy = space.norm(x + y);
        double nx = space.norm(x);
        double ny = space.norm(y);
        double rhs = nx * nx + 2.0 * space.sip(y, x) + c * ny * ny;
        worst = std::max(worst, rel_excess(nxy * nxy, rhs, nx * nx + ny * ny));
    }
    return worst;
}

double check_smoothness_equality_gap(const LpSpace& space, int draws, Rng& rng) {
    const double c = space.smoothness_constant();
    double worst = 0.0;
    for (int t = 0; t < draws; ++t) {
        Vec x = rng.normal_vec(space.dim());
        Vec y = rng.normal_vec(space.dim());
        double nxy = space.norm(x + y);
        double nx = space.norm(x);
        double ny = space.norm(y);
        double rhs = nx * nx + 2.0 * space.sip(y, x) + c * ny * ny;
        worst = std::max(worst,
                         std::abs(nxy * nxy - rhs) / (1.0 + nx * nx + ny * ny));
    }
    return worst;
}

double DualityViolations::max_violation() const {
    return std::max({sip_consistency, pairing, norm_preservation, round_trip});
}

DualityViolations check_duality_map(const LpSpace& space, int draws, Rng& rng) {
    DualityViolations v;
    for (int t = 0; t < draws; ++t) {
        Vec x = rng.normal_vec(space.dim());
        Vec y = rng.normal_vec(space.dim());
        Vec j = space.duality_map(y);
        double ny = space.norm(y);
        v.sip_consistency = std::max(v.sip_consistency, rel_gap(space.sip(x, y), x.dot(j)));
        v.pairing = std::max(v.pairing, rel_gap(y.dot(j), ny * ny));
        v.norm_preservation = std::max(v.norm_preservation, rel_gap(pnorm(j, space.q()), ny));
        Vec back = space.inverse_duality_map(j);
        v.round_trip = std::max(v.round_trip, (back - y).cwiseAbs().maxCoeff() / (1.0 + ny));
    }
    return v;
}

double AdjointViolations::max_violation() const {
    return std::max({defining_identity, norm_bound, norm_identity, transpose_p2});
}

AdjointViolations check_adjoint(const LpSpace& domain, const LpSpace& codomain, int triples,
                                Rng& rng) {
    AdjointViolations v;
    for (int t = 0; t < triples; ++t) {
        Mat a = rng.normal_mat(codomain.dim(), domain.dim());
        BoundedLinearOp op(a, domain, codomain);
        Vec x = rng.normal_vec(domain.dim());
        Vec y = rng.normal_vec(codomain.dim());
        Vec ay = op.generalized_adjoint_apply(y);

        v.defining_identity = std::max(
            v.defining_identity,
            rel_gap(codomain.sip(op.apply(x), y), domain.sip(x, ay)));

        double bound = op.norm_upper() * codomain.norm(y);
        v.norm_bound = std::max(v.norm_bound, rel_excess(domain.norm(ay), bound, bound));

        double lhs = domain.norm(ay);
        double rhs = pnorm(a.transpose() * codomain.duality_map(y), domain.q());
        v.norm_identity = std::max(v.norm_identity, rel_gap(lhs, rhs));

        if (domain.is_hilbert() && codomain.is_hilbert()) {
            Vec diff = ay - a.transpose() * y;
            v.transpose_p2 = std::max(v.transpose_p2, diff.cwiseAbs().maxCoeff());
        }
    }
    return v;
}

double check_moduli_bracket(const MonotoneMap& map, const LpSpace& space, int trials, Rng& rng) {
    auto [alpha_est, beta_est] = estimate_moduli(map, space, trials, rng);
    return std::max({0.0, map.alpha() - alpha_est, beta_est - map.beta()});
}

bool VerifyReport::all_pass() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

VerifyReport run_verification(std::uint64_t seed, int trials) {
    require(trials >= 2, "run_verification: trials must be >= 2");
    VerifyReport report;
    Rng rng(seed);
    const double ps[] = {2.0, 3.0, 4.0};
    const Index dims[] = {1, 2, 5, 50};

    auto add = [&](std::string name, int samples, double violation, double tol) {
        report.suites.push_back({std::move(name), samples, violation, tol, violation <= tol});
    };

    for (double p : ps) {
        double sip_worst = 0.0, smooth_worst = 0.0, duality_worst = 0.0;
        for (Index d : dims) {
            LpSpace space(d, p);
            sip_worst = std::max(sip_worst, check_sip_axioms(space, trials, rng).max_violation());
            smooth_worst = std::max(smooth_worst, check_smoothness_inequality(space, trials, rng));
            duality_worst =
                std::max(duality_worst, check_duality_map(space, trials, rng).max_violation());
        }
        char name[64];
        std::snprintf(name, sizeof(name), "sip_axioms_p%g", p);
        add(name, trials * 4, sip_worst, 1e-10);
        std::snprintf(name, sizeof(name), "smoothness_inequality_p%g", p);
        add(name, trials * 4, smooth_worst, 1e-10);
        std::snprintf(name, sizeof(name), "duality_map_p%g", p);
        add(name, trials * 4, duality_worst, 1e-10);
    }
    {
        LpSpace h(5, 2.0);
        add("smoothness_equality_p2", trials, check_smoothness_equality_gap(h, trials, rng), 1e-12);
    }

    int adjoint_triples = std::max(2, trials / 10);
    for (double p1 : ps) {
        for (double p2 : ps) {
            LpSpace domain(4, p1);
            LpSpace codomain(3, p2);
            char name[64];
            std::snprintf(name, sizeof(name), "adjoint_p%g_p%g", p1, p2);
            add(name, adjoint_triples,
                check_adjoint(domain, codomain, adjoint_triples, rng).max_violation(), 1e-10);
        }
    }

    for (double p : ps) {
        LpSpace space(6, p);
        std::vector<std::pair<std::string, ConvexSet>> sets = {
            {"whole", ConvexSet::whole_space()},
            {"box", ConvexSet::box(Vec::Constant(6, -0.5), Vec::Constant(6, 1.0))},
            {"orthant", ConvexSet::nonnegative_orthant()},
            {"subspace", ConvexSet::coordinate_subspace({true, false, true, false, false, true})},
        };
        if (p == 2.0)
            sets.emplace_back("ball", ConvexSet::euclidean_ball(space, Vec::Constant(6, 0.25), 1.5));
        for (auto& [label, set] : sets) {
            auto rep = verify_sunny_nonexpansive(set, space, trials, rng);
            char name[64];
            std::snprintf(name, sizeof(name), "retraction_%s_p%g", label.c_str(), p);
            add(name, trials, rep.max_violation(), 1e-12);
        }
    }

    for (double p : ps) {
        LpSpace space(5, p);
        std::vector<std::pair<std::string, MonotoneMap>> maps = {
            {"affine_scalar", MonotoneMap::affine_scalar(1.7, rng.normal_vec(5))},
            {"diagonal_affine",
             MonotoneMap::diagonal_affine(rng.uniform_vec(5, 0.5, 3.0), rng.normal_vec(5))},
            {"componentwise", MonotoneMap::componentwise(0.8, 2.5, rng.normal_vec(5))},
        };
        for (auto& [label, map] : maps) {
            char name[64];
            std::snprintf(name, sizeof(name), "moduli_%s_p%g", label.c_str(), p);
            add(name, trials, check_moduli_bracket(map, space, trials, rng), 1e-9);
        }
    }

    return report;
}

}  // namespace sspvip
