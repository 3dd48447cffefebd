#include "lagmult/special.hpp"
#include "lagmult/transform.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace lagmult;

namespace {

LaguerreExpansion random_expansion(std::mt19937_64& eng, double alpha, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    LaguerreExpansion f{alpha, std::vector<double>(degree + 1)};
    for (double& c : f.coeffs) c = u(eng);
    return f;
}

}  // namespace

TEST_CASE("analysis of a single mode") {
    const LaguerreExpansion f{0.5, {0.0, 0.0, 1.0}};
    const auto c = analyze(f, 0.5, 4);
    CHECK(c[2] == doctest::Approx(0.88622692545275801).epsilon(1e-12));
    for (int k : {0, 1, 3, 4}) CHECK(std::abs(c[k]) < 1e-13);
    CHECK(f.degree() == 2);
    CHECK(LaguerreExpansion{0.0, {0.0, 0.0}}.degree() == -1);
}

TEST_CASE("quadrature analysis agrees with the closed form") {
    std::mt19937_64 eng(3);
    for (double a : {-0.5, 0.0, 1.0, 2.5}) {
        const auto f = random_expansion(eng, a, 40);
        const auto q = analyze(f, a, 40);
        const auto c = coefficients_of(f);
        for (std::size_t k = 0; k < c.size(); ++k) CHECK(q[k] == doctest::Approx(c[k]).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("synthesize then analyze returns the sequence") {
    std::mt19937_64 eng(9);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> m(25);
    for (double& v : m) v = u(eng);
    const auto g = synthesize(m, 1.3);
    const auto back = analyze(g, 1.3, 24);
    for (std::size_t k = 0; k < m.size(); ++k) CHECK(back[k] == doctest::Approx(m[k]).epsilon(1e-9).scale(1.0));
}

TEST_CASE("Parseval sides agree") {
    std::mt19937_64 eng(17);
    for (double a : {-0.5, 0.0, 2.5}) {
        const auto s = parseval_sides(random_expansion(eng, a, 64));
        CHECK(s.coefficient_side == doctest::Approx(s.integral_side).epsilon(1e-10));
    }
}

TEST_CASE("damped evaluation") {
    std::mt19937_64 eng(1);
    const auto f = random_expansion(eng, 0.0, 30);
    for (double x : {0.0, 0.7, 12.0, 60.0})
        CHECK(evaluate_damped(f, x, 0.5) == doctest::Approx(f(x) * std::exp(-0.5 * x)).epsilon(1e-10).scale(1e-12));
    // far tail stays finite
    CHECK(std::isfinite(evaluate_damped(f, 5000.0, 0.5)));
    CHECK(monomial_envelope(f) > 0.0);
}

TEST_CASE("multipliers act coefficientwise") {
    std::mt19937_64 eng(4);
    const auto f = random_expansion(eng, 0.0, 10);
    const auto id = apply_multiplier(RealSequence::finite(std::vector<double>(11, 1.0)), f);
    CHECK(id.coeffs == f.coeffs);
    const auto cut = apply_multiplier(RealSequence::finite({1.0, 1.0}), f);
    CHECK(cut.degree() == 1);
    CHECK(cut.coeffs[0] == f.coeffs[0]);
}

TEST_CASE("transfer identity in coefficient form") {
    std::mt19937_64 eng(21);
    for (double a : {0.5, 1.0, 1.5}) {
        const auto f = random_expansion(eng, 0.0, 12);
        for (int k : {0, 3, 8}) {
            const auto t = transfer_identity_check(f, a, k);
            CAPTURE(a);
            CAPTURE(k);
            CHECK(t.in_convergence_region);
            CHECK(t.gap < 1e-6);
        }
    }
}
