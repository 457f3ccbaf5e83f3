#pragma once

#include "sspvip/instance.hpp"

#include <string>
#include <vector>

namespace sspvip {

// Sampled checks of the semi-inner-product axioms and the Giles homogeneity
// property. Violations are relative: |lhs - rhs| / (1 + |lhs|) for identities,
// positive excess / (1 + scale) for inequalities.
struct SipAxiomViolations {
    double additivity = 0.0;          // [x+y,z] = [x,z] + [y,z]
    double homogeneity_first = 0.0;   // [t x, y] = t [x, y]
    double positivity = 0.0;          // [x,x] > 0 for x != 0
    double cauchy_schwarz = 0.0;      // [x,y]^2 <= [x,x][y,y]
    double homogeneity_second = 0.0;  // [x, t y] = |t| [x, y]
    double norm_consistency = 0.0;    // [x,x] = ||x||^2

    double max_violation() const;
};

SipAxiomViolations check_sip_axioms(const LpSpace& space, int draws, Rng& rng);

// positive excess of ||x+y||^2 over ||x||^2 + 2[y,x] + c ||y||^2, relative
double check_smoothness_inequality(const LpSpace& space, int draws, Rng& rng);

// |gap| of the same expression; an identity at p = 2
double check_smoothness_equality_gap(const LpSpace& space, int draws, Rng& rng);

// duality mapping: consistency with sip, the pairing / norm defining
// properties, and the inverse round trip
struct DualityViolations {
    double sip_consistency = 0.0;    // [x,y] = sum_i x_i J(y)_i
    double pairing = 0.0;            // <y, J(y)> = ||y||^2
    double norm_preservation = 0.0;  // ||J(y)||_q = ||y||_p
    double round_trip = 0.0;         // J^{-1}(J(y)) = y

    double max_violation() const;
};

DualityViolations check_duality_map(const LpSpace& space, int draws, Rng& rng);

struct AdjointViolations {
    double defining_identity = 0.0;  // [Ax, y]_Y = [x, A+ y]_X
    double norm_bound = 0.0;         // ||A+ y|| <= norm_upper ||y||
    double norm_identity = 0.0;      // ||A+ y||_p = ||A^T J_Y(y)||_q
    double transpose_p2 = 0.0;       // A+ y = A^T y when p1 = p2 = 2

    double max_violation() const;
};

AdjointViolations check_adjoint(const LpSpace& domain, const LpSpace& codomain, int triples,
                                Rng& rng);

// max(0, alpha - alpha_est, beta_est - beta): declared moduli must bracket
// the sampled estimates
double check_moduli_bracket(const MonotoneMap& map, const LpSpace& space, int trials, Rng& rng);

struct SuiteResult {
    std::string name;
    int samples = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool all_pass() const;
};

// The full battery driven by the CLI `verify` command: sip axioms,
// smoothness inequality, duality maps, generalized adjoints, retraction
// characterizations, and moduli brackets, over a fixed grid of exponents
// and dimensions. Deterministic in the seed.
VerifyReport run_verification(std::uint64_t seed, int trials);

}  // namespace sspvip
