#pragma once

#include "sspvip/linops.hpp"
#include "sspvip/monotone_map.hpp"
#include "sspvip/retraction.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

namespace sspvip {

// Full problem datum for the system of split variational inequalities:
// find (x1, y1) in C1 x C1 whose images x2 = A x1, y2 = A y1 lie in C2 and
// satisfy the four coupled inequalities driven by F, G (space 1) and
// f, g (space 2).
struct SspvipInstance {
    LpSpace space1;
    LpSpace space2;
    ConvexSet set1;
    ConvexSet set2;
    MonotoneMap F;  // alpha1-strongly monotone, beta1-Lipschitz, on space1
    MonotoneMap G;  // alpha2, beta2, on space1
    MonotoneMap f;  // sigma1, eta1, on space2
    MonotoneMap g;  // sigma2, eta2, on space2
    BoundedLinearOp A;
    std::optional<std::pair<Vec, Vec>> known_solution;  // (x1*, y1*)
    std::uint64_t seed = 0;
};

// Residuals of the fixed-point reformulation
//   x1 = Q_{C1}(y1 - lambda F y1)         -> r1
//   x2 = Q_{C2}(y2 - gamma  f y2)         -> r2
//   y1 = Q_{C1}(x1 - lambda G x1)         -> r3
//   y2 = Q_{C2}(x2 - gamma  g x2)         -> r4
// with x2 = A x1, y2 = A y1. All four vanish iff (x1, y1) solves the system.
std::array<double, 4> residuals(const SspvipInstance& inst, const Vec& x1, const Vec& y1,
                                double lambda, double gamma);

struct Moduli {
    double alpha1 = 1.0, beta1 = 1.5;  // F
    double alpha2 = 1.0, beta2 = 1.5;  // G
    double sigma1 = 1.0, eta1 = 1.5;   // f
    double sigma2 = 1.0, eta2 = 1.5;   // g
};

struct GeneratorParams {
    std::uint64_t seed = 1;
    Index dim1 = 4;
    Index dim2 = 3;
    double p1 = 2.0;
    double p2 = 2.0;
    Moduli moduli;
    SetKind set1 = SetKind::Box;
    SetKind set2 = SetKind::Box;
};

// Synthetic instance with known solution (u, u): picks u in C1 with
// A u in C2, builds catalog maps with the exact prescribed moduli, and
// shifts them to vanish at the solution. Deterministic in the seed.
SspvipInstance generate_instance(const GeneratorParams& params);

// residual check at the known solution (throws if absent)
double known_solution_residual(const SspvipInstance& inst, double lambda, double gamma);

SetKind set_kind_from_name(const std::string& name);
std::string set_kind_name(SetKind kind);

}  // namespace sspvip
