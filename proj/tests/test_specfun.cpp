#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "support/oracles.hpp"
#include "windfit/specfun.hpp"

using namespace windfit::specfun;

TEST_SUITE("specfun") {

TEST_CASE("ln_gamma at integer and half-integer points") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5723649429247000871).epsilon(1e-13));
}

TEST_CASE("ln_gamma against high-precision reference values") {
    // reference values computed with mpmath at 30 digits
    const struct {
        double a, expected;
    } table[] = {
        {1e-3, 6.9071788853838536825},  {0.01, 4.5994798780420217225},
        {0.1, 2.2527126517342059599},   {0.5, 0.57236494292470008707},
        {1.5, -0.12078223763524522235}, {3.7, 1.4280723266653879219},
        {12.0, 17.502307845873885839},  {146.5, 582.52521991527492001},
        {1e3, 5905.2204232091812118},
    };
    for (const auto& [a, expected] : table) {
        const double got = ln_gamma(a);
        CHECK(std::fabs(got - expected) <= 1e-12 * std::max(std::fabs(expected), 1.0));
    }
}

TEST_CASE("ln_gamma rejects bad input") {
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.5), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("reg_inc_gamma_P exponential special case and lower bound") {
    for (double x : {0.0, 0.1, 0.5, 1.0, 2.5, 10.0, 40.0})
        CHECK(reg_inc_gamma_P(1.0, x) == doctest::Approx(-std::expm1(-x)).epsilon(1e-12));
    for (double a : {0.3, 1.0, 7.0, 250.0}) CHECK(reg_inc_gamma_P(a, 0.0) == 0.0);
    CHECK(reg_inc_gamma_P(2.0, 1.0) ==
          doctest::Approx(1.0 - 2.0 * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("reg_inc_gamma_P against high-precision reference values") {
    const struct {
        double a, x, expected;
    } table[] = {
        {0.1, 0.01, 0.66262125995447980576}, {0.5, 0.25, 0.52049987781304653768},
        {1.0, 2.0, 0.86466471676338730811},  {3.5, 2.0, 0.22022259152428407907},
        {10.0, 12.0, 0.75760783832948765132}, {100.0, 90.0, 0.15822098918643016810},
        {1000.0, 1000.0, 0.50420524418021550850},
    };
    for (const auto& [a, x, expected] : table)
        CHECK(std::fabs(reg_inc_gamma_P(a, x) - expected) <= 1e-10);
}

TEST_CASE("reg_inc_gamma_P is monotone in x and stays within [0, 1]") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const double a = oracle::uniform_in(rng, 0.05, 50.0);
        double prev = 0.0;
        for (int i = 0; i <= 60; ++i) {
            const double x = 3.0 * a * static_cast<double>(i) / 60.0;
            const double p = reg_inc_gamma_P(a, x);
            CHECK(p >= prev);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            prev = p;
        }
    }
}

TEST_CASE("reg_inc_gamma_P derivative matches the gamma density") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = oracle::uniform_in(rng, 0.8, 20.0);
        const double x = oracle::uniform_in(rng, 0.3 * a, 2.0 * a);
        const double h = 1e-4 * std::max(1.0, x);
        const double numeric =
            oracle::central_diff([&](double t) { return reg_inc_gamma_P(a, t); }, x, h);
        const double density = std::exp((a - 1.0) * std::log(x) - x - ln_gamma(a));
        CHECK(numeric == doctest::Approx(density).epsilon(1e-5));
    }
}

TEST_CASE("reg_inc_gamma_P saturates instead of returning NaN") {
    CHECK(reg_inc_gamma_P(1.0, 5000.0) == 1.0);
    CHECK(reg_inc_gamma_P(500.0, 1e-280) == 0.0);
    CHECK(reg_inc_gamma_P(0.1, 1e308) == 1.0);
}

TEST_CASE("reg_inc_gamma_P rejects bad input") {
    CHECK_THROWS_AS(reg_inc_gamma_P(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_inc_gamma_P(-2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_inc_gamma_P(1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(reg_inc_gamma_P(1.0, std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

TEST_CASE("reg_inc_beta_I uniform case, bounds and symmetry point") {
    for (double x : {0.0, 0.2, 0.5, 0.77, 1.0})
        CHECK(reg_inc_beta_I(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-12));
    CHECK(reg_inc_beta_I(3.0, 0.5, 0.0) == 0.0);
    CHECK(reg_inc_beta_I(3.0, 0.5, 1.0) == 1.0);
    CHECK(reg_inc_beta_I(2.0, 2.0, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("reg_inc_beta_I against high-precision reference values") {
    const struct {
        double a, b, x, expected;
    } table[] = {
        {2.0, 5.0, 0.3, 0.579825},
        {0.5, 0.5, 0.25, 1.0 / 3.0},
        {5.0, 1.0, 0.9, 0.59049},
        {3.5, 0.7, 0.6, 0.10453150366409794252},
        {40.0, 60.0, 0.4, 0.50543700111559467927},
    };
    for (const auto& [a, b, x, expected] : table)
        CHECK(std::fabs(reg_inc_beta_I(a, b, x) - expected) <= 1e-10);
}

TEST_CASE("reg_inc_beta_I symmetry identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = oracle::uniform_in(rng, 0.1, 20.0);
        const double b = oracle::uniform_in(rng, 0.1, 20.0);
        const double x = oracle::uniform01(rng);
        CHECK(std::fabs(reg_inc_beta_I(a, b, x) + reg_inc_beta_I(b, a, 1.0 - x) - 1.0) <= 1e-9);
    }
}

TEST_CASE("reg_inc_beta_I is monotone in x") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = oracle::uniform_in(rng, 0.3, 10.0);
        const double b = oracle::uniform_in(rng, 0.3, 10.0);
        double prev = 0.0;
        for (int i = 0; i <= 50; ++i) {
            const double p = reg_inc_beta_I(a, b, static_cast<double>(i) / 50.0);
            CHECK(p >= prev);
            prev = p;
        }
        CHECK(prev == 1.0);
    }
}

TEST_CASE("reg_inc_beta_I rejects bad input") {
    CHECK_THROWS_AS(reg_inc_beta_I(0.0, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(reg_inc_beta_I(1.0, -1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(reg_inc_beta_I(1.0, 1.0, -0.01), std::domain_error);
    CHECK_THROWS_AS(reg_inc_beta_I(1.0, 1.0, 1.01), std::domain_error);
}

TEST_CASE("std_normal_cdf at the center and the 97.5% point") {
    CHECK(std_normal_cdf(0.0) == 0.5);
    CHECK(std_normal_cdf(1.959963985) == doctest::Approx(0.975).epsilon(1e-9));
    CHECK(std_normal_cdf(1.959963985) ==
          doctest::Approx(0.97500000002688156230).epsilon(1e-13));
    CHECK(std_normal_cdf(-3.0) == doctest::Approx(1.3498980316300945e-3).epsilon(1e-12));
}

TEST_CASE("std_normal_cdf reflection identity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const double z = oracle::uniform_in(rng, -8.0, 8.0);
        CHECK(std::fabs(std_normal_cdf(z) + std_normal_cdf(-z) - 1.0) <= 1e-12);
    }
}

TEST_CASE("std_normal_quantile inverts the CDF") {
    CHECK(std_normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std_normal_quantile(0.975) == doctest::Approx(1.9599639845400542).epsilon(1e-12));
    CHECK(std_normal_quantile(0.001) == doctest::Approx(-3.0902323061678135).epsilon(1e-12));
    CHECK(std_normal_quantile(1e-10) == doctest::Approx(-6.3613409024040562).epsilon(1e-11));
    for (double p : {1e-10, 1e-6, 0.001, 0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999,
                     1.0 - 1e-6, 1.0 - 1e-10})
        CHECK(std::fabs(std_normal_cdf(std_normal_quantile(p)) - p) <= 1e-9);
}

TEST_CASE("std_normal_quantile rejects the endpoints") {
    CHECK_THROWS_AS(std_normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(-0.2), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

}  // TEST_SUITE
