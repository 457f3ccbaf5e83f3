#include "sspvip/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sspvip {

AlphaSequence AlphaSequence::constant(double value) {
    require(value > 0.0 && value <= 1.0, "alpha: constant must lie in (0, 1]");
    return AlphaSequence{Kind::Constant, value};
}

AlphaSequence AlphaSequence::harmonic(double scale) {
    require(scale > 0.0 && scale <= 1.0, "alpha: harmonic scale must lie in (0, 1]");
    return AlphaSequence{Kind::Harmonic, scale};
}

AlphaSequence AlphaSequence::parse(const std::string& text) {
    if (text == "harmonic") return harmonic(1.0);
    if (text.rfind("harmonic:", 0) == 0) {
        char* end = nullptr;
        double s = std::strtod(text.c_str() + 9, &end);
        require(end != nullptr && *end == '\0', "alpha: malformed harmonic scale");
        return harmonic(s);
    }
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    require(end != nullptr && *end == '\0' && !text.empty(), "alpha: expected a number or 'harmonic[:s]'");
    return constant(v);
}

std::string AlphaSequence::describe() const {
    char buf[64];
    if (kind == Kind::Constant) {
        std::snprintf(buf, sizeof(buf), "%.17g", scale);
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "harmonic:%.17g", scale);
    return buf;
}

namespace {

// sqrt of 1 - 2 t a + c t^2 b^2, with FP-noise clamping at the boundary of
// the real regime; a genuinely negative radicand reports through `neg`
double contraction_factor(double t, double a, double c, double b, bool& neg) {
    double rad = 1.0 - 2.0 * t * a + c * t * t * b * b;
    if (rad < 0.0) {
        if (rad > -1e-12) rad = 0.0;
        else {
            neg = true;
            return std::numeric_limits<double>::quiet_NaN();
        }
    }
    return std::sqrt(rad);
}

}  // namespace

ContractionCertificate certificate(const SspvipInstance& inst, const SolverConfig& cfg) {
    require(cfg.lambda > 0.0, "certificate: lambda must be positive");
    require(cfg.gamma > 0.0, "certificate: gamma must be positive");
    require(cfg.rho >= 0.0, "certificate: rho must be nonnegative");

    ContractionCertificate cert;
    cert.lambda = cfg.lambda;
    cert.gamma = cfg.gamma;
    cert.rho = cfg.rho;
    cert.c1 = inst.space1.smoothness_constant();
    cert.c2 = inst.space2.smoothness_constant();
    cert.op_norm_upper = inst.A.norm_upper();

    bool neg = false;
    cert.theta1 = contraction_factor(cfg.lambda, inst.F.alpha(), cert.c1, inst.F.beta(), neg);
    cert.theta2 = contraction_factor(cfg.lambda, inst.G.alpha(), cert.c1, inst.G.beta(), neg);
    cert.theta3 = contraction_factor(cfg.gamma, inst.f.alpha(), cert.c2, inst.f.beta(), neg);
    cert.theta4 = contraction_factor(cfg.gamma, inst.g.alpha(), cert.c2, inst.g.beta(), neg);
    if (neg) {
        cert.diagnostics.push_back("negative radicand: parameters outside the real-valued regime");
        cert.feasible = false;
        return cert;
    }

    cert.m = cfg.rho * cert.op_norm_upper * cert.op_norm_upper;
    cert.p1 = (1.0 - cert.m * cert.theta3) / (1.0 + cert.m);
    cert.p2 = (1.0 - cert.m * cert.theta4) / (1.0 + cert.m);
    cert.k1 = cert.theta1 + cert.m * (cert.theta1 + cert.theta3);
    cert.k2 = cert.theta2 + cert.m * (cert.theta2 + cert.theta4);
    cert.theta = std::max(cert.k1, cert.k2);

    bool ok = true;
    if (!(cert.p1 > 0.0 && cert.p2 > 0.0)) {
        cert.diagnostics.push_back("p_i <= 0: coupling constant m too large (m theta_{i+2} >= 1)");
        ok = false;
    }

    const double alphas[2] = {inst.F.alpha(), inst.G.alpha()};
    const double betas[2] = {inst.F.beta(), inst.G.beta()};
    const double ps[2] = {cert.p1, cert.p2};
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 2 && ok; ++i) {
        double rad = alphas[i] * alphas[i] - cert.c1 * betas[i] * betas[i] * (1.0 - ps[i] * ps[i]);
        if (!(rad > 0.0)) {
            cert.diagnostics.push_back(
                "strong monotonicity too weak: alpha_" + std::to_string(i + 1) +
                " <= beta sqrt(c1 (1 - p^2))");
            ok = false;
            break;
        }
        double denom = cert.c1 * betas[i] * betas[i];
        lo = std::max(lo, (alphas[i] - std::sqrt(rad)) / denom);
        hi = std::min(hi, (alphas[i] + std::sqrt(rad)) / denom);
    }
    if (ok) {
        cert.window_lower = lo;
        cert.window_upper = hi;
        if (!(lo < hi)) {
            cert.diagnostics.push_back("lambda window is empty");
            ok = false;
        } else if (!(lo < cfg.lambda && cfg.lambda < hi)) {
            cert.diagnostics.push_back("lambda lies outside the admissible window");
            ok = false;
        }
    }
    if (ok && !(cert.theta < 1.0)) {
        cert.diagnostics.push_back("contraction factor theta >= 1");
        ok = false;
    }
    cert.feasible = ok;
    return cert;
}

double IterateRecord::max_residual() const {
    return *std::max_element(residuals.begin(), residuals.end());
}

std::string solve_status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::ConvergedResidual: return "converged_residual";
        case SolveStatus::ConvergedStep: return "converged_step";
        case SolveStatus::MaxIters: return "max_iters";
        case SolveStatus::Diverged: return "diverged";
    }
    return "?";
}

namespace {

struct StarError {
    bool known = false;
    Vec xs, ys;
    double at(const LpSpace& s, const Vec& x, const Vec& y) const {
        return s.norm(x - xs) + s.norm(y - ys);
    }
};

IterateRecord make_record(const SspvipInstance& inst, const SolverConfig& cfg, int n,
                          const Vec& x1, const Vec& y1, const StarError& star) {
    IterateRecord rec;
    rec.n = n;
    rec.x1 = x1;
    rec.y1 = y1;
    const Vec x2 = inst.A.apply(x1);
    const Vec y2 = inst.A.apply(y1);
    rec.a1 = inst.set1.retract(inst.space1, y1 - cfg.lambda * inst.F.evaluate(y1));
    rec.a2 = inst.set2.retract(inst.space2, y2 - cfg.gamma * inst.f.evaluate(y2));
    rec.b1 = inst.set1.retract(inst.space1, x1 - cfg.lambda * inst.G.evaluate(x1));
    rec.b2 = inst.set2.retract(inst.space2, x2 - cfg.gamma * inst.g.evaluate(x2));
    rec.residuals = {inst.space1.norm(x1 - rec.a1), inst.space2.norm(x2 - rec.a2),
                     inst.space1.norm(y1 - rec.b1), inst.space2.norm(y2 - rec.b2)};
    if (star.known) {
        rec.err_star = star.at(inst.space1, x1, y1);
        rec.y2_err = inst.space2.norm(y2 - inst.A.apply(star.ys));
        rec.y2_err_bound = inst.A.norm_upper() * inst.space1.norm(y1 - star.ys);
    }
    return rec;
}

SolveResult run_iteration(const SspvipInstance& inst, const SolverConfig& cfg, const Vec& x1_start,
                          const Vec& y1_start, bool coupled) {
    require(x1_start.size() == inst.space1.dim(), "solve: start dimension mismatch");
    require(y1_start.size() == inst.space1.dim(), "solve: start dimension mismatch");
    require_finite(x1_start, "solve");
    require_finite(y1_start, "solve");
    require(cfg.max_iters >= 1, "solve: max_iters must be >= 1");

    SolveResult res;
    res.cert = certificate(inst, cfg);
    if (!res.cert.feasible) {
        std::string why;
        for (const auto& d : res.cert.diagnostics) why += (why.empty() ? "" : "; ") + d;
        res.warnings.push_back("certificate infeasible (" + why +
                               "); convergence is not guaranteed");
    }

    StarError star;
    if (inst.known_solution) {
        star.known = true;
        star.xs = inst.known_solution->first;
        star.ys = inst.known_solution->second;
    }

    Vec x1 = x1_start;
    Vec y1 = y1_start;
    res.trace.push_back(make_record(inst, cfg, 0, x1, y1, star));
    const double err0 = star.known ? res.trace.front().err_star : 0.0;

    if (res.trace.front().max_residual() <= cfg.tol_residual) {
        res.status = SolveStatus::ConvergedResidual;
        res.iterations = 0;
        return res;
    }

    for (int n = 0; n < cfg.max_iters; ++n) {
        const IterateRecord& cur = res.trace.back();
        const double alpha_n = cfg.alpha(n);

        Vec x_next = (1.0 - alpha_n) * x1 +
                     alpha_n * (cur.a1 + cfg.rho * inst.A.generalized_adjoint_apply(
                                             cur.a2 - inst.A.apply(cur.a1)));
        Vec y_next;
        if (coupled) {
            y_next = (1.0 - alpha_n) * y1 +
                     alpha_n * (cur.b1 + cfg.rho * inst.A.generalized_adjoint_apply(
                                             cur.b2 - inst.A.apply(cur.b1)));
        } else {
            y_next = x_next;  // reduced problem: the y-sequence is the x-sequence
        }

        if (!all_finite(x_next) || !all_finite(y_next)) {
            res.status = SolveStatus::Diverged;
            res.iterations = n;
            res.warnings.push_back("non-finite iterate at iteration " + std::to_string(n + 1));
            return res;
        }

        double step = inst.space1.norm(x_next - x1) + inst.space1.norm(y_next - y1);
        x1 = std::move(x_next);
        y1 = std::move(y_next);

        IterateRecord rec = make_record(inst, cfg, n + 1, x1, y1, star);
        rec.step = step;
        if (star.known) {
            rec.theta_bound_rhs = (1.0 - alpha_n * (1.0 - res.cert.theta)) * cur.err_star;
        }
        res.trace.push_back(std::move(rec));
        res.iterations = n + 1;

        if (star.known && res.trace.back().err_star > 1e12 * (1.0 + err0)) {
            res.status = SolveStatus::Diverged;
            res.warnings.push_back("error growth beyond 1e12 at iteration " + std::to_string(n + 1));
            return res;
        }
        if (res.trace.back().max_residual() <= cfg.tol_residual) {
            res.status = SolveStatus::ConvergedResidual;
            return res;
        }
        if (step <= cfg.tol_step) {
            res.status = SolveStatus::ConvergedStep;
            return res;
        }
    }
    res.status = SolveStatus::MaxIters;
    return res;
}

}  // namespace

SolveResult solve_sspvip(const SspvipInstance& inst, const SolverConfig& cfg, const Vec& x1_start,
                         const Vec& y1_start) {
    return run_iteration(inst, cfg, x1_start, y1_start, true);
}

SolveResult solve_spvip(const SspvipInstance& inst, const SolverConfig& cfg, const Vec& x1_start) {
    require(inst.F == inst.G, "solve_spvip: reduction requires F = G");
    require(inst.f == inst.g, "solve_spvip: reduction requires f = g");
    require(cfg.gamma == cfg.lambda, "solve_spvip: reduction requires gamma = lambda");
    return run_iteration(inst, cfg, x1_start, x1_start, false);
}

SolverConfig suggest_config(const SspvipInstance& inst) {
    SolverConfig cfg;
    const double c2 = inst.space2.smoothness_constant();

    // gamma: coarse minimization of max(theta3, theta4)
    double g1 = inst.f.alpha() / (c2 * inst.f.beta() * inst.f.beta());
    double g2 = inst.g.alpha() / (c2 * inst.g.beta() * inst.g.beta());
    double glo = 0.5 * std::min(g1, g2);
    double ghi = 1.5 * std::max(g1, g2);
    double best_gamma = g1;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 200; ++i) {
        double g = glo + (ghi - glo) * i / 200.0;
        if (g <= 0.0) continue;
        bool neg = false;
        double t3 = contraction_factor(g, inst.f.alpha(), c2, inst.f.beta(), neg);
        double t4 = contraction_factor(g, inst.g.alpha(), c2, inst.g.beta(), neg);
        if (neg) continue;
        double v = std::max(t3, t4);
        if (v < best_val) {
            best_val = v;
            best_gamma = g;
        }
    }
    cfg.gamma = best_gamma;

    // rho: shrink the coupling constant m until the lambda window opens
    const double u = inst.A.norm_upper();
    double m = 0.25;
    for (int tries = 0; tries < 80; ++tries) {
        cfg.rho = (u > 0.0) ? m / (u * u) : m;
        SolverConfig probe = cfg;
        probe.lambda = 1.0;  // placeholder; only the window matters here
        ContractionCertificate cert = certificate(inst, probe);
        if (cert.window_lower < cert.window_upper && cert.window_upper > 0.0) {
            cfg.lambda = 0.5 * (cert.window_lower + cert.window_upper);
            ContractionCertificate final_cert = certificate(inst, cfg);
            if (final_cert.feasible) return cfg;
        }
        m *= 0.5;
    }
    // no feasible parameters found; return the best-effort config
    cfg.rho = (u > 0.0) ? m / (u * u) : m;
    cfg.lambda = inst.F.alpha() /
                 (inst.space1.smoothness_constant() * inst.F.beta() * inst.F.beta());
    return cfg;
}

}  // namespace sspvip
