#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>

namespace sspvip {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

// Structural errors: bad construction parameters, dimension mismatches,
// malformed input files.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw StructuralError(message);
}

inline bool all_finite(const Vec& x) {
    return x.allFinite();
}

inline void require_finite(const Vec& x, const char* what) {
    require(all_finite(x), std::string(what) + ": non-finite coordinate");
}

// sign(t) * |t|^e, with 0 mapped to 0 for every exponent.
inline double signed_pow(double t, double e) {
    if (t == 0.0) return 0.0;
    double m = std::pow(std::abs(t), e);
    return t < 0.0 ? -m : m;
}

}  // namespace sspvip
