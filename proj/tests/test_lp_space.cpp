#include "sspvip/lp_space.hpp"
#include "sspvip/rng.hpp"
#include "sspvip/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace sspvip;

namespace {
Vec make_vec(std::initializer_list<double> vals) {
    Vec v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (double x : vals) v[i++] = x;
    return v;
}
}  // namespace

TEST_CASE("construction rejects invalid parameters") {
    CHECK_THROWS_AS(LpSpace(0, 2.0), StructuralError);
    CHECK_THROWS_AS(LpSpace(3, 1.5), StructuralError);
    CHECK_THROWS_AS(LpSpace(3, std::nan("")), StructuralError);
    LpSpace s(3, 2.5);
    CHECK(s.smoothness_constant() == 1.5);
    CHECK(LpSpace(1, 2.0).smoothness_constant() == 1.0);
}

TEST_CASE("norm: direct values") {
    LpSpace e2(2, 2.0);
    CHECK(e2.norm(make_vec({3.0, 4.0})) == doctest::Approx(5.0).epsilon(1e-15));

    LpSpace e3(2, 3.0);
    CHECK(e3.norm(make_vec({1.0, 1.0})) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-15));

    CHECK(e3.norm(Vec::Zero(2)) == 0.0);
    CHECK_THROWS_AS(e3.norm(Vec::Zero(5)), StructuralError);

    Vec bad = make_vec({1.0, std::nan("")});
    CHECK_THROWS_AS(e3.norm(bad), StructuralError);
}

TEST_CASE("sip: direct values and zero conventions") {
    LpSpace e2(2, 2.0);
    CHECK(e2.sip(make_vec({1.0, 2.0}), make_vec({3.0, 4.0})) == 11.0);  // dot product at p = 2

    LpSpace e3(2, 3.0);
    Vec ones = make_vec({1.0, 1.0});
    double n = e3.norm(ones);
    CHECK(e3.sip(ones, ones) == doctest::Approx(n * n).epsilon(1e-14));
    CHECK(e3.sip(ones, ones) == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-14));

    CHECK(e3.sip(make_vec({5.0, 7.0}), Vec::Zero(2)) == 0.0);
}

TEST_CASE("duality map: direct values, pairing, norm preservation") {
    LpSpace e2(3, 2.0);
    Vec y = make_vec({0.3, -1.2, 2.0});
    CHECK((e2.duality_map(y) - y).cwiseAbs().maxCoeff() == 0.0);  // identity on Hilbert space

    LpSpace e3(2, 3.0);
    Vec ones = make_vec({1.0, 1.0});
    Vec j = e3.duality_map(ones);
    double expected = std::pow(2.0, -1.0 / 3.0);
    CHECK(j[0] == doctest::Approx(expected).epsilon(1e-14));
    CHECK(j[1] == doctest::Approx(expected).epsilon(1e-14));
    double n = e3.norm(ones);
    CHECK(ones.dot(j) == doctest::Approx(n * n).epsilon(1e-14));

    CHECK(e3.duality_map(Vec::Zero(2)).isZero(0.0));
    CHECK(e3.inverse_duality_map(Vec::Zero(2)).isZero(0.0));
}

TEST_CASE("inverse duality map round trip") {
    LpSpace e2(4, 2.0);
    Vec u = make_vec({1.0, -2.0, 0.25, 3.0});
    CHECK((e2.inverse_duality_map(u) - u).cwiseAbs().maxCoeff() == 0.0);

    LpSpace e4(6, 4.0);
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        Vec y = rng.normal_vec(6);
        Vec back = e4.inverse_duality_map(e4.duality_map(y));
        CHECK((back - y).cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + y.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("semi-inner-product axioms on random draws") {
    Rng rng(11);
    for (double p : {2.0, 3.0, 4.0}) {
        for (Index d : {1, 2, 5, 50}) {
            LpSpace space(d, p);
            auto v = check_sip_axioms(space, 500, rng);
            CAPTURE(p);
            CAPTURE(d);
            CHECK(v.max_violation() <= 1e-10);
        }
    }
}

TEST_CASE("second-argument homogeneity: signed scaling, modulus identity") {
    // [x, t y] = t [x, y] for real t; the homogeneity property in modulus
    // form reads |[x, t y]| = |t| |[x, y]|
    LpSpace e3(4, 3.0);
    Rng rng(13);
    Vec x = rng.normal_vec(4);
    Vec y = rng.normal_vec(4);
    double s = e3.sip(x, y);
    CHECK(e3.sip(x, 2.5 * y) == doctest::Approx(2.5 * s).epsilon(1e-12));
    CHECK(e3.sip(x, -2.5 * y) == doctest::Approx(-2.5 * s).epsilon(1e-12));
    CHECK(std::abs(e3.sip(x, -2.5 * y)) ==
          doctest::Approx(2.5 * std::abs(s)).epsilon(1e-12));
    CHECK(e3.sip(x, 0.0 * y) == 0.0);
}

TEST_CASE("smoothness inequality with c = p - 1; equality at p = 2") {
    Rng rng(17);
    for (double p : {2.0, 3.0, 4.0}) {
        LpSpace space(5, p);
        CHECK(check_smoothness_inequality(space, 2000, rng) <= 1e-10);
    }
    LpSpace h(5, 2.0);
    CHECK(check_smoothness_equality_gap(h, 2000, rng) <= 1e-12);
}

TEST_CASE("duality consistency: sip against duality-map coordinates") {
    Rng rng(19);
    for (double p : {2.0, 3.0, 4.0}) {
        LpSpace space(7, p);
        CHECK(check_duality_map(space, 500, rng).max_violation() <= 1e-10);
    }
}

TEST_CASE("norm is scale-robust") {
    LpSpace e4(3, 4.0);
    Vec big = make_vec({1e200, -2e200, 0.5e200});
    double n = e4.norm(big);
    CHECK(std::isfinite(n));
    Vec unit = big / 1e200;
    CHECK(n == doctest::Approx(1e200 * e4.norm(unit)).epsilon(1e-14));
}
