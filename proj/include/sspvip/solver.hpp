#pragma once

#include "sspvip/instance.hpp"

#include <limits>
#include <string>
#include <vector>

namespace sspvip {

// Relaxation sequence {alpha_n} in (0, 1]: constant, or harmonic
// scale / (n + 1). Both satisfy sum alpha_n = infinity.
struct AlphaSequence {
    enum class Kind { Constant, Harmonic };
    Kind kind = Kind::Constant;
    double scale = 0.9;

    double operator()(int n) const {
        return kind == Kind::Constant ? scale : scale / static_cast<double>(n + 1);
    }

    static AlphaSequence constant(double value);
    static AlphaSequence harmonic(double scale = 1.0);
    static AlphaSequence parse(const std::string& text);
    std::string describe() const;
};

struct SolverConfig {
    double lambda = 0.5;
    double gamma = 0.5;
    double rho = 0.1;
    AlphaSequence alpha;
    int max_iters = 10000;
    double tol_residual = 1e-10;
    double tol_step = 1e-15;
};

// Convergence machinery of the main theorem:
//   theta_i     = sqrt(1 - 2 lambda alpha_i + c1 lambda^2 beta_i^2)   (i = 1, 2)
//   theta_{i+2} = sqrt(1 - 2 gamma sigma_i + c2 gamma^2 eta_i^2)
//   m   = rho ||A+|| ||A||, both taken as the certified upper bound
//   p_i = (1 - m theta_{i+2}) / (1 + m)
//   k_i = theta_i + m (theta_i + theta_{i+2}),   theta = max(k1, k2)
// and the admissible lambda window
//   max_i (alpha_i - sqrt(alpha_i^2 - c1 beta_i^2 (1 - p_i^2))) / (c1 beta_i^2)
//     < lambda <
//   min_i (alpha_i + sqrt(...)) / (c1 beta_i^2).
// lambda lies in the window iff theta_i < p_i (i = 1, 2) iff theta < 1.
struct ContractionCertificate {
    double lambda = 0.0, gamma = 0.0, rho = 0.0;
    double c1 = 0.0, c2 = 0.0;
    double op_norm_upper = 0.0;
    double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0, theta4 = 0.0;
    double m = 0.0;
    double p1 = 0.0, p2 = 0.0;
    double k1 = 0.0, k2 = 0.0;
    double theta = 0.0;
    double window_lower = 0.0, window_upper = 0.0;
    bool feasible = false;
    std::vector<std::string> diagnostics;
};

ContractionCertificate certificate(const SspvipInstance& inst, const SolverConfig& cfg);

// One row per visited state (initial state is row n = 0).
struct IterateRecord {
    int n = 0;
    Vec x1, y1;
    Vec a1, a2, b1, b2;
    std::array<double, 4> residuals{};
    double err_star = std::numeric_limits<double>::quiet_NaN();
    double step = std::numeric_limits<double>::quiet_NaN();
    // contraction bound carried over from the previous row:
    // (1 - alpha_{n-1} (1 - theta)) * err_star_{n-1}
    double theta_bound_rhs = std::numeric_limits<double>::quiet_NaN();
    // both sides of ||y2^n - y2*|| <= ||A|| ||y1^n - y1*||
    double y2_err = std::numeric_limits<double>::quiet_NaN();
    double y2_err_bound = std::numeric_limits<double>::quiet_NaN();

    double max_residual() const;
};

enum class SolveStatus { ConvergedResidual, ConvergedStep, MaxIters, Diverged };

std::string solve_status_name(SolveStatus status);

struct SolveResult {
    std::vector<IterateRecord> trace;
    SolveStatus status = SolveStatus::MaxIters;
    int iterations = 0;
    ContractionCertificate cert;
    std::vector<std::string> warnings;

    const IterateRecord& final_record() const { return trace.back(); }
};

// Relaxed retraction iteration for the full system: per step
//   a1 = Q_{C1}(y1 - lambda F y1)       a2 = Q_{C2}(y2 - gamma f y2)
//   b1 = Q_{C1}(x1 - lambda G x1)       b2 = Q_{C2}(x2 - gamma g x2)
//   x1' = (1 - alpha_n) x1 + alpha_n (a1 + rho A+(a2 - A a1))
//   y1' = (1 - alpha_n) y1 + alpha_n (b1 + rho A+(b2 - A b1))
// with x2 = A x1, y2 = A y1. Runs even when the certificate is infeasible
// (a warning is recorded); aborts on non-finite iterates or error growth
// beyond 1e12.
SolveResult solve_sspvip(const SspvipInstance& inst, const SolverConfig& cfg, const Vec& x1_start,
                         const Vec& y1_start);

// Single-inequality reduction (F = G, f = g, gamma = lambda): the y-sequence
// coincides with the x-sequence, so only x-iterates are computed and traced.
SolveResult solve_spvip(const SspvipInstance& inst, const SolverConfig& cfg, const Vec& x1_start);

// Feasible (lambda, gamma, rho) for an instance when one exists: gamma
// near-minimizing max(theta3, theta4), m shrunk until the window opens,
// lambda at the window midpoint.
SolverConfig suggest_config(const SspvipInstance& inst);

}  // namespace sspvip
