#include "lagmult/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace lagmult;

TEST_CASE("log_gamma at integers and half-integers") {
    CHECK(log_gamma(11.0) == doctest::Approx(15.104412573075516).epsilon(1e-14));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("binom_A closed values") {
    CHECK(binom_A(0, 3.7) == 1.0);
    CHECK(binom_A(2, -0.5) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(binom_A(2, -2.0) == 0.0);
    CHECK(binom_A(1, -2.0) == doctest::Approx(-1.0));
    CHECK(binom_A(5, 1.0) == doctest::Approx(6.0));
    // A_n^0 = 1
    for (int n = 0; n < 50; ++n) CHECK(binom_A(n, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("binomial stream matches binom_A and the partial-sum rule") {
    for (double a : {-2.3, -1.0, -0.5, 0.0, 0.7, 2.5}) {
        BinomCoeffStream s(a), t(a + 1.0);
        double partial = 0.0;
        for (int j = 0; j < 200; ++j) {
            CAPTURE(a);
            CAPTURE(j);
            const double v = s[j];
            CHECK(v == doctest::Approx(binom_A(j, a)).epsilon(1e-11));
            partial += v;
            // sum_{i<=j} A_i^a = A_j^{a+1}
            CHECK(partial == doctest::Approx(t[j]).epsilon(1e-10).scale(1.0));
        }
    }
}

TEST_CASE("laguerre_batch small cases") {
    const auto e = laguerre_batch(0.0, 2, 2.0);
    REQUIRE(e.values.size() == 3);
    CHECK(e.values[0] == 1.0);
    CHECK(e.values[1] == doctest::Approx(-1.0));
    CHECK(e.values[2] == doctest::Approx(-1.0));
    CHECK_THROWS_AS(laguerre_batch(-1.0, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_batch(0.0, 2, -1.0), std::invalid_argument);
}

TEST_CASE("L_2 against its explicit polynomial") {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> ua(-0.9, 5.0), ux(0.0, 30.0);
    for (int i = 0; i < 100; ++i) {
        const double a = ua(eng), x = ux(eng);
        const double want = 0.5 * ((a + 1) * (a + 2) - 2 * (a + 2) * x + x * x);
        const double got = laguerre_batch(a, 2, x).values[2];
        CHECK(got == doctest::Approx(want).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("recurrence residual stays at rounding level") {
    for (double a : {-0.5, 0.0, 2.5})
        for (double x : {0.1, 7.0, 200.0}) CHECK(recurrence_residual(laguerre_batch(a, 256, x)) < 1e-12);
}

TEST_CASE("R_n(0) = 1 and damping") {
    const auto r = laguerre_normalized(1.5, 40, 0.0);
    for (double v : r) CHECK(v == doctest::Approx(1.0));
    const auto raw = laguerre_batch(0.5, 30, 3.0).values;
    const auto d = laguerre_batch_damped(0.5, 30, 3.0, 0.5);
    for (std::size_t k = 0; k < raw.size(); ++k)
        CHECK(d[k] == doctest::Approx(raw[k] * std::exp(-1.5)).epsilon(1e-12).scale(1e-300));
}

TEST_CASE("orthonormal functions") {
    CHECK(script_L(1, 0.0, 2.0) == doctest::Approx(-0.36787944117144233).epsilon(1e-13));
    CHECK(script_L(0, 0.0, 1.0) == doctest::Approx(std::exp(-0.5)));
    // direct formula at moderate arguments
    for (double a : {-0.5, 0.0, 1.0, 2.5}) {
        const double t = 3.3;
        const auto batch = script_L_batch(a, 20, t);
        const auto r = laguerre_normalized(a, 20, t);
        for (int k = 0; k <= 20; ++k) {
            const double scale = std::exp(0.5 * (std::log(binom_A(k, a)) - log_gamma(a + 1.0)));
            const double want = scale * r[k] * std::exp(-0.5 * t) * std::pow(t, 0.5 * a);
            CHECK(batch[k] == doctest::Approx(want).epsilon(1e-11).scale(1e-12));
            CHECK(script_L(k, a, t) == doctest::Approx(batch[k]));
        }
    }
    CHECK_THROWS_AS(script_L(2, 0.0, 0.0), std::domain_error);
}
