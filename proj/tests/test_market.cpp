#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oligopoly/market.hpp"
#include "oracles.hpp"

using namespace oligopoly;

TEST_CASE("price is the reciprocal of total supply") {
    CHECK(price(OutputVector{0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(price(OutputVector{1.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS((void)price(OutputVector{0.0, 0.0}), std::domain_error);
}

TEST_CASE("profit and marginal profit") {
    const MarketParams eighth{1.0 / 8.0};
    CHECK(profit(OutputVector{1.0, 1.0}, 0, eighth) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK(profit(OutputVector{0.0, 2.5}, 0, eighth) == 0.0);
    CHECK(profit(OutputVector{1.0, 1.0, 1.0}, 2, MarketParams{1.0 / 9.0}) ==
          doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)profit(OutputVector{0.0, 0.0}, 0, eighth), std::domain_error);

    CHECK(marginal_profit(OutputVector{1.0, 1.0}, 0, eighth) == doctest::Approx(0.0));
    CHECK(marginal_profit(OutputVector{1.0, 1.0, 1.0}, 0, MarketParams{1.0 / 9.0}) ==
          doctest::Approx(0.0));
    CHECK(marginal_profit(OutputVector{1.0, 1.0}, 0, MarketParams{1.0}) ==
          doctest::Approx(-7.0 / 4.0).epsilon(1e-15));
}

TEST_CASE("marginal profit vanishes at the symmetric stationary point") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (double c : {0.25, 0.5, 1.0, 2.0}) {
            const double q = std::sqrt((n - 1.0) / (2.0 * c * n * n));
            const OutputVector state{std::vector<double>(n, q)};
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(marginal_profit(state, i, MarketParams{c})) < 1e-12);
        }
    }
}

TEST_CASE("best response examples") {
    CHECK(best_response(0.0, MarketParams{0.7}) == 0.0);

    // the symmetric duopoly equilibrium solves its own first-order condition
    for (double c : {0.125, 0.5, 1.0, 3.0}) {
        const double q = 1.0 / std::sqrt(8.0 * c);
        CHECK(best_response(q, MarketParams{c}) == doctest::Approx(q).epsilon(1e-13));
    }

    // S=1, c=1/2: root of q(1+q)^2 = 1, located independently via the
    // companion-matrix oracle on q^3 + 2q^2 + q - 1
    const std::vector<double> roots = oracles::real_roots(CharPoly{{-1.0, 1.0, 2.0}});
    REQUIRE(roots.size() >= 1);
    const double expected = roots.back();
    CHECK(expected == doctest::Approx(0.46557123187676803).epsilon(1e-12));
    const double q = best_response(1.0, MarketParams{0.5});
    CHECK(q == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(1.0 - 2.0 * 0.5 * q * (1.0 + q) * (1.0 + q)) < 1e-12);

    CHECK_THROWS_AS((void)best_response(-0.1, MarketParams{1.0}), std::domain_error);
}

TEST_CASE("best response root stays bracketed with a small residual") {
    auto gen = oracles::rng(20240817);
    std::uniform_real_distribution<double> log_s(-4.0, 4.0), log_c(-3.0, 3.0);
    for (int trial = 0; trial < 10000; ++trial) {
        const double S = std::exp(log_s(gen));
        const double c = std::exp(log_c(gen));
        const double q = best_response(S, MarketParams{c});
        const double hi = std::cbrt(S / (2.0 * c)) + S;
        REQUIRE(q >= 0.0);
        REQUIRE(q <= hi);
        const double residual = std::abs(S - 2.0 * c * q * (S + q) * (S + q));
        REQUIRE(residual <= response_rtol * std::max(S, 2.0 * c * q * q * q));
    }
}

TEST_CASE("best response scale law") {
    // substituting (q, S) -> (alpha q, alpha S) in the first-order cubic
    // factors as alpha [S - 2 c alpha^2 q (S+q)^2], hence
    // best_response(S, c) = alpha * best_response(S/alpha, c*alpha^2)
    auto gen = oracles::rng(7151);
    std::uniform_real_distribution<double> dist_s(0.05, 20.0), dist_c(0.05, 5.0),
        dist_a(0.1, 10.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const double S = dist_s(gen), c = dist_c(gen), alpha = dist_a(gen);
        const double lhs = best_response(S, MarketParams{c});
        const double rhs = alpha * best_response(S / alpha, MarketParams{c * alpha * alpha});
        REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("lma response") {
    CHECK(lma_response(0.0, 0.0, MarketParams{1.0}) == 0.0);
    CHECK(lma_response(1.0, 1.0, MarketParams{1.0}) == doctest::Approx(0.3).epsilon(1e-15));

    // fixed point at the symmetric four- and five-firm equilibria
    for (double c : {0.25, 1.0, 2.0}) {
        const double q4 = std::sqrt(3.0 / (32.0 * c));
        CHECK(lma_response(3.0 * q4, q4, MarketParams{c}) == doctest::Approx(q4).epsilon(1e-14));
        const double q5 = std::sqrt(2.0 / (25.0 * c));
        CHECK(lma_response(4.0 * q5, q5, MarketParams{c}) == doctest::Approx(q5).epsilon(1e-14));
    }
}

TEST_CASE("positive output earns less than revenue") {
    auto gen = oracles::rng(99);
    std::uniform_real_distribution<double> dist(0.01, 3.0);
    for (int trial = 0; trial < 500; ++trial) {
        const OutputVector state{dist(gen), dist(gen), dist(gen)};
        const MarketParams m{dist(gen)};
        for (std::size_t i = 0; i < 3; ++i)
            REQUIRE(profit(state, i, m) < price(state) * state[i]);
    }
}
