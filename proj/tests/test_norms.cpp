#include "lagmult/norms.hpp"
#include "lagmult/quadrature.hpp"
#include "lagmult/transform.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace lagmult;

TEST_CASE("norms of the constant function") {
    const LaguerreExpansion one{0.0, {1.0}};
    CHECK(lp_norm(one, 1.0, 0.0) == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(lp_norm(one, 1.0, -0.5) == doctest::Approx(std::sqrt(2 * std::numbers::pi)).epsilon(1e-7));
    CHECK(lp_norm(one, 2.0, 0.0) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK_THROWS_AS(lp_norm(one, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("L^2 norm at gamma = alpha is the Parseval integral") {
    std::mt19937_64 eng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double a : {0.0, 1.0}) {
        LaguerreExpansion f{a, std::vector<double>(20)};
        for (double& c : f.coeffs) c = u(eng);
        LpNormOptions opt;
        opt.tol = 1e-10;
        const double n2 = lp_norm(f, 2.0, a, opt);
        CHECK(n2 * n2 == doctest::Approx(parseval_sides(f).integral_side).epsilon(1e-8));
    }
}

TEST_CASE("roots of a single mode are the Gauss nodes") {
    for (int n : {5, 32, 96}) {
        const LaguerreExpansion f{0.0, [n] {
                                      std::vector<double> c(n + 1, 0.0);
                                      c[n] = 1.0;
                                      return c;
                                  }()};
        const auto roots = sign_changes(f, 4.0 * n + 40.0, 16 * n + 256);
        const auto rule = gauss_laguerre(n, 0.0);
        REQUIRE(roots.size() == static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) CHECK(roots[i] == doctest::Approx(rule.nodes[i]).epsilon(1e-10));
    }
}

TEST_CASE("DecayingFunction norm") {
    DecayingFunction g;
    g.eval = [](double x) { return x; };
    g.envelope_power = 1.0;
    // int x e^{-x/2} dx = 4
    CHECK(lp_norm(g, SpaceSpec(1.0, 0.0, 0.0), 1e-9) == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("space validation") {
    CHECK(SpaceSpec(1.0, 0.0, 0.0).q_is_infinite());
    CHECK(SpaceSpec(1.5, 0.0, 0.0).q() == doctest::Approx(3.0));
    CHECK_THROWS_AS(SpaceSpec(2.5, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec(1.0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("single-mode term at k = n") {
    // Delta_2 Delta^a e_n at n is 1, so the term is (n+1)^{(gamma+1)/p - 1/2}
    const SpaceSpec space(1.2, 0.3, 0.0);
    const double w = (0.3 + 1.0) / 1.2 - 0.5;
    for (int n : {1, 7, 40}) {
        std::vector<double> e(n + 1, 0.0);
        e[n] = 1.0;
        for (double a : {0.0, 0.5, 1.5})
            CHECK(thm11_term(e, space, a, n) == doctest::Approx(std::pow(n + 1.0, w)).epsilon(1e-12));
        CHECK(thm11_lhs(e, space, 0.0) >= thm11_term(e, space, 0.0, n));
    }
}

TEST_CASE("block norms") {
    const std::vector<double> ones(65, 1.0);
    const auto inf = block_sup_norm(ones, 0.0, std::numeric_limits<double>::infinity(), 32, BlockGrid::dyadic);
    CHECK(inf.n_values == std::vector<int>{1, 2, 4, 8, 16, 32});
    for (double b : inf.block_norms) CHECK(b == doctest::Approx(1.0));
    // q = 1: sum_{k=n}^{2n} (k+1)^{-1}, bounded by ln 2 + 1/(n+1)
    const auto l1 = block_sup_norm(ones, 0.0, 1.0, 32, BlockGrid::every_n);
    CHECK(l1.n_values.size() == 32);
    CHECK(l1.block_norms.back() == doctest::Approx(std::log(2.0)).epsilon(0.03));
    CHECK_THROWS_AS(block_sup_norm(ones, 0.0, 1.0, 40, BlockGrid::dyadic), std::invalid_argument);
}

TEST_CASE("weighted l^1 sums") {
    CHECK(thm32_lhs(RealSequence::finite({1.0}), 0.0, 0.0).value == doctest::Approx(1.0));
    const auto k = thm31_K(RealSequence::finite({1.0}), 1.0, 0.0, 0.0);
    CHECK(k.condition_holds);
    CHECK(k.value == doctest::Approx(1.0));
    const auto pw = RealSequence::parametric([](std::size_t j) { return std::pow(j + 1.0, -2.0); },
                                             TailDescriptor{1.0, 2.0, false});
    const auto s = weighted_difference_sum(pw, 0.0, 0.0, 1e-6);
    CHECK(s.value + s.tail_estimate == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-5));
}
