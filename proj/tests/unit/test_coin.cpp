#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "faultbayes/coin.hpp"
#include "faultbayes/model.hpp"

using namespace faultbayes;

namespace {

// Independent trapezoidal integral, summed in plain ascending order.
double trapezoid(const std::vector<double>& grid,
                 const std::vector<double>& values) {
    double total = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        total += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
    }
    return total;
}

double trapezoid_mean(const std::vector<double>& grid,
                      const std::vector<double>& density) {
    std::vector<double> weighted(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        weighted[i] = grid[i] * density[i];
    }
    return trapezoid(grid, weighted);
}

}  // namespace

TEST_CASE("uniform prior: flat density on a symmetric grid") {
    const BiasPrior prior = uniform_prior(101);
    REQUIRE(prior.grid.size() == 101);
    REQUIRE(prior.density.size() == 101);
    CHECK(prior.grid.front() == 0.0);
    CHECK(prior.grid.back() == 1.0);
    CHECK(prior.grid[50] == 0.5);
    for (double d : prior.density) {
        CHECK(d == 1.0);
    }
    // Mirror symmetry must be bitwise, not approximate.
    for (std::size_t i = 0; i < prior.grid.size(); ++i) {
        CHECK(prior.grid[i] + prior.grid[prior.grid.size() - 1 - i] == 1.0);
    }
}

TEST_CASE("grid size validation") {
    CHECK_THROWS_AS(uniform_prior(100), model_error);   // even
    CHECK_THROWS_AS(uniform_prior(99), model_error);    // too small
    CHECK_NOTHROW(uniform_prior(101));
    CHECK_THROWS_AS(beta_prior(2.0, 2.0, 11), model_error);
    CHECK_THROWS_AS(mixture_prior(0.99, 500.0, {1.0, 1.0}, 10000),
                    model_error);
}

TEST_CASE("beta_prior(1,1) is the uniform prior") {
    const BiasPrior flat = beta_prior(1.0, 1.0, 1001);
    for (double d : flat.density) {
        CHECK(d == 1.0);
    }
}

TEST_CASE("beta_prior rejects spiked shapes") {
    CHECK_THROWS_AS(beta_prior(0.5, 2.0), model_error);
    CHECK_THROWS_AS(beta_prior(2.0, 0.9), model_error);
    CHECK_NOTHROW(beta_prior(1.0, 3.0, 101));
}

TEST_CASE("mixture_prior validates the fair weight") {
    CHECK_THROWS_AS(mixture_prior(-0.1), model_error);
    CHECK_THROWS_AS(mixture_prior(1.1), model_error);
    CHECK_THROWS_AS(mixture_prior(0.99, 0.5), model_error);
    CHECK_NOTHROW(mixture_prior(0.0, 500.0, {1.0, 1.0}, 101));
    CHECK_NOTHROW(mixture_prior(1.0, 500.0, {1.0, 1.0}, 101));
}

TEST_CASE("prior densities integrate to one") {
    for (const BiasPrior& prior :
         {uniform_prior(501), beta_prior(2.0, 5.0, 501),
          mixture_prior(0.99, 500.0, {1.0, 1.0}, 501)}) {
        CHECK(trapezoid(prior.grid, prior.density) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("coin_posterior: all-heads run under a uniform prior") {
    const BiasPosterior post = coin_posterior(uniform_prior(), 10, 10);
    // Conjugate oracle: Beta(11, 1), mean 11/12, mode 1.
    CHECK(std::abs(post.summary.mean - 11.0 / 12.0) <= 1e-6);
    CHECK(post.summary.map == 1.0);
    CHECK(post.summary.ci_high > 0.99);
    // Central 95% interval of Beta(11,1): [0.025^(1/11), 0.975^(1/11)].
    CHECK(std::abs(post.summary.ci_low - std::pow(0.025, 1.0 / 11.0)) <=
          1e-3);
    CHECK(std::abs(post.summary.ci_high - std::pow(0.975, 1.0 / 11.0)) <=
          1e-3);
}

TEST_CASE("coin_posterior: beta conjugacy on a mixed record") {
    const BiasPosterior post = coin_posterior(beta_prior(2.0, 5.0), 20, 7);
    // Beta(2+7, 5+13): mean 9 / 27.
    CHECK(std::abs(post.summary.mean - 9.0 / 27.0) <= 1e-6);
    // MAP at (a-1)/(a+b-2) = 8/25.
    CHECK(std::abs(post.summary.map - 8.0 / 25.0) <= 1e-3);
}

TEST_CASE("coin_posterior: no data returns the prior") {
    const BiasPrior prior = beta_prior(3.0, 2.0, 1001);
    const BiasPosterior post = coin_posterior(prior, 0, 0);
    for (std::size_t i = 0; i < prior.density.size(); ++i) {
        CHECK(std::abs(post.density[i] - prior.density[i]) <= 1e-12);
    }
}

TEST_CASE("coin_posterior: posterior integrates to one") {
    for (std::int64_t x : {0, 3, 7, 10}) {
        const BiasPosterior post = coin_posterior(uniform_prior(1001), 10, x);
        CHECK(trapezoid(post.grid, post.density) ==
              doctest::Approx(1.0).epsilon(1e-8));
        const double mean = trapezoid_mean(post.grid, post.density);
        CHECK(std::abs(mean - post.summary.mean) <= 1e-9);
    }
}

TEST_CASE("coin_posterior: endpoint handling is exact") {
    const BiasPosterior all_tails = coin_posterior(uniform_prior(101), 5, 0);
    CHECK(all_tails.density.back() == 0.0);   // Q = 1 impossible
    CHECK(all_tails.density.front() > 0.0);   // Q = 0 allowed when x = 0
    const BiasPosterior all_heads = coin_posterior(uniform_prior(101), 5, 5);
    CHECK(all_heads.density.front() == 0.0);
    CHECK(all_heads.density.back() > 0.0);
}

TEST_CASE("coin_posterior: evidence validation") {
    CHECK_THROWS_AS(coin_posterior(uniform_prior(101), -1, 0), model_error);
    CHECK_THROWS_AS(coin_posterior(uniform_prior(101), 5, 6), model_error);
    CHECK_THROWS_AS(coin_posterior(uniform_prior(101), 5, -2), model_error);
}

TEST_CASE("coin_posterior: vanishing product is degenerate evidence") {
    BiasPrior prior = uniform_prior(101);
    // Prior mass only at Q = 0; a positive observation contradicts it.
    for (std::size_t i = 1; i < prior.density.size(); ++i) {
        prior.density[i] = 0.0;
    }
    prior.density[0] = 2.0 / (prior.grid[1] - prior.grid[0]);
    CHECK_THROWS_AS(coin_posterior(prior, 1, 1), degenerate_evidence_error);
    CHECK_NOTHROW(coin_posterior(prior, 1, 0));
}

TEST_CASE("coin_posterior: mirror symmetry is bitwise for symmetric priors") {
    const BiasPrior priors[] = {uniform_prior(), mixture_prior()};
    const std::int64_t cases[][2] = {{7, 2}, {9, 3}, {12, 6}};
    for (const BiasPrior& prior : priors) {
        for (const auto& ev : cases) {
            const std::int64_t n = ev[0];
            const std::int64_t x = ev[1];
            const BiasPosterior a = coin_posterior(prior, n, x);
            const BiasPosterior b = coin_posterior(prior, n, n - x);
            const std::size_t last = a.grid.size() - 1;
            for (std::size_t i = 0; i < a.grid.size(); ++i) {
                CHECK(a.density[i] == b.density[last - i]);
            }
        }
    }
}

TEST_CASE("fair_mass: uniform posterior over a symmetric window") {
    const BiasPosterior post = coin_posterior(uniform_prior(1001), 0, 0);
    CHECK(std::abs(fair_mass(post, 0.05) - 0.1) <= 1e-9);
    CHECK(fair_mass(post, 0.49999999) >= 1.0 - 1e-6);
}

TEST_CASE("fair_mass: skewed posterior against the Beta(11,1) oracle") {
    const BiasPosterior post = coin_posterior(uniform_prior(), 10, 10);
    // P(0.45 <= Q <= 0.55) under Beta(11,1) = 0.55^11 - 0.45^11.
    const double oracle = std::pow(0.55, 11.0) - std::pow(0.45, 11.0);
    CHECK(std::abs(fair_mass(post, 0.05) - oracle) <= 1e-6);
}

TEST_CASE("fair_mass: window edges are interpolated, not snapped") {
    const BiasPosterior post = coin_posterior(uniform_prior(101), 0, 0);
    // epsilon chosen between grid points of the 101 grid (spacing 0.01).
    CHECK(std::abs(fair_mass(post, 0.0251) - 0.0502) <= 1e-9);
}

TEST_CASE("fair_mass validates epsilon") {
    const BiasPosterior post = coin_posterior(uniform_prior(101), 2, 1);
    CHECK_THROWS_AS(fair_mass(post, 0.0), model_error);
    CHECK_THROWS_AS(fair_mass(post, 0.5), model_error);
    CHECK_THROWS_AS(fair_mass(post, -0.1), model_error);
}

TEST_CASE("mixture prior: fair component dominates a balanced record") {
    const BiasPosterior balanced = coin_posterior(mixture_prior(), 500, 250);
    CHECK(balanced.summary.mean > 0.49);
    CHECK(balanced.summary.mean < 0.51);
    CHECK(fair_mass(balanced, 0.05) > 0.99);
}

TEST_CASE("mixture prior: a lopsided record overwhelms the fair component") {
    const BiasPosterior biased = coin_posterior(mixture_prior(), 500, 450);
    CHECK(biased.summary.mean > 0.7);
    CHECK(fair_mass(biased, 0.05) < 0.01);
}

TEST_CASE("grid refinement converges") {
    const BiasPosterior coarse =
        coin_posterior(uniform_prior(10001), 10000, 9000);
    const BiasPosterior fine =
        coin_posterior(uniform_prior(20001), 10000, 9000);
    CHECK(std::abs(coarse.summary.mean - fine.summary.mean) <= 1e-6);
    CHECK(std::abs(coarse.summary.mean - 9001.0 / 10002.0) <= 1e-6);
}
