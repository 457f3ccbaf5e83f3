#pragma once

#include "sspvip/common.hpp"

namespace sspvip {

// Finite-dimensional real l^p space, p >= 2. Carries the exponent, its
// conjugate q = p/(p-1), and the constant of smoothness c = p - 1 that enters
// the inequality ||x+y||^2 <= ||x||^2 + 2[y,x] + c||y||^2.
//
// The semi-inner product is the Giles one,
//   [x,y] = ||y||^{2-p} * sum_i x_i y_i |y_i|^{p-2},
// with [x,0] := 0. The normalized duality mapping J and its inverse are the
// coordinatewise signed-power maps; at p = 2 everything collapses to the
// Euclidean dot product and J = identity, and the code takes that path
// exactly (no pow round-off).
class LpSpace {
public:
    LpSpace(Index dim, double p);

    Index dim() const { return dim_; }
    double p() const { return p_; }
    double q() const { return q_; }
    // constant of smoothness, = p - 1
    double smoothness_constant() const { return c_; }

    bool is_hilbert() const { return p_ == 2.0; }

    double norm(const Vec& x) const;

    // Giles semi-inner product [x, y]; [x, 0] = 0 by convention
    double sip(const Vec& x, const Vec& y) const;

    // J(y), in dual coordinates: <x, J(y)> = [x, y], <y, J(y)> = ||y||^2,
    // ||J(y)||_q = ||y||_p
    Vec duality_map(const Vec& y) const;

    // z with J(z) = u; the duality map of the conjugate-exponent space
    Vec inverse_duality_map(const Vec& u) const;

    bool operator==(const LpSpace& other) const {
        return dim_ == other.dim_ && p_ == other.p_;
    }

private:
    void check_dim(const Vec& x, const char* what) const;

    Index dim_;
    double p_;
    double q_;
    double c_;
};

// ||x||_e for an arbitrary exponent e > 1, scaled against overflow.
// LpSpace::norm delegates here; the inverse duality map needs it for the
// conjugate exponent q < 2, which LpSpace itself does not admit.
double pnorm(const Vec& x, double e);

}  // namespace sspvip
