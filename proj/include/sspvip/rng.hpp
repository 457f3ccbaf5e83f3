#pragma once

#include "sspvip/common.hpp"

#include <cstdint>
#include <random>

namespace sspvip {

// Seeded random source. Derives all variates from raw mt19937_64 output so
// that streams are reproducible across standard library implementations
// (std::*_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53 random bits
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Box-Muller; consumes exactly two uniforms per variate
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 == 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    Vec uniform_vec(Index dim, double lo, double hi) {
        Vec v(dim);
        for (Index i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
        return v;
    }

    Vec normal_vec(Index dim) {
        Vec v(dim);
        for (Index i = 0; i < dim; ++i) v[i] = normal();
        return v;
    }

    Mat normal_mat(Index rows, Index cols) {
        Mat m(rows, cols);
        for (Index r = 0; r < rows; ++r)
            for (Index c = 0; c < cols; ++c) m(r, c) = normal();
        return m;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace sspvip
