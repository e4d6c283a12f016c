#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "support/oracles.hpp"
#include "windfit/distributions.hpp"

using namespace windfit;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

ParamSet make_params(double alpha, double loc, double scale) {
    ParamSet p;
    p.alpha = alpha;
    p.loc = loc;
    p.scale = scale;
    return p;
}

ParamSet make_beta_params(double alpha, double beta, double loc, double scale) {
    ParamSet p = make_params(alpha, loc, scale);
    p.beta = beta;
    return p;
}
}  // namespace

TEST_SUITE("distributions") {

TEST_CASE("pdf matches the displayed densities at hand-checked points") {
    CHECK(pdf(DistributionKind::Weibull, make_params(1, 0, 1), 0.0) == doctest::Approx(1.0));
    CHECK(pdf(DistributionKind::Beta, make_beta_params(1, 1, 0, 1), 0.3) == doctest::Approx(1.0));
    CHECK(pdf(DistributionKind::Weibull, make_params(2, 0, 1), 1.0) ==
          doctest::Approx(0.73575888234288464319).epsilon(1e-12));
    CHECK(pdf(DistributionKind::Gamma, make_params(1, 0, 2), 0.0) == doctest::Approx(0.5));
}

TEST_CASE("log_pdf avoids forming the pdf") {
    CHECK(log_pdf(DistributionKind::Weibull, make_params(1, 0, 1), 3.0) ==
          doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(log_pdf(DistributionKind::LogNormal, make_params(0.5, 0, 1), 1.0) ==
          doctest::Approx(-0.22579135264472743236).epsilon(1e-12));
    // far in the Weibull tail the pdf underflows but the log stays finite
    const double lp = log_pdf(DistributionKind::Weibull, make_params(1, 0, 1), 800.0);
    CHECK(lp == doctest::Approx(-800.0).epsilon(1e-12));
    CHECK(pdf(DistributionKind::Weibull, make_params(1, 0, 1), 800.0) == 0.0);
}

TEST_CASE("densities vanish below the location for every kind") {
    for (DistributionKind kind : kAllKinds) {
        const ParamSet p = kind == DistributionKind::Beta ? make_beta_params(2, 3, 1.5, 4)
                                                          : make_params(2, 1.5, 4);
        CHECK(pdf(kind, p, 1.4999) == 0.0);
        CHECK(log_pdf(kind, p, 1.4999) == -kInf);
        CHECK(log_pdf(kind, p, -10.0) == -kInf);
    }
}

TEST_CASE("singular left edges are flagged as infinite, not hidden") {
    CHECK(pdf(DistributionKind::Weibull, make_params(0.5, 0, 1), 0.0) == kInf);
    CHECK(log_pdf(DistributionKind::Gamma, make_params(0.5, 0, 1), 0.0) == kInf);
    CHECK(pdf(DistributionKind::Beta, make_beta_params(0.5, 2, 0, 1), 0.0) == kInf);
    CHECK(pdf(DistributionKind::Beta, make_beta_params(2, 0.5, 0, 1), 1.0) == kInf);
    // shape above one: density is zero at the edge instead
    CHECK(pdf(DistributionKind::Weibull, make_params(2, 0, 1), 0.0) == 0.0);
    CHECK(log_pdf(DistributionKind::Gamma, make_params(2, 0, 1), 0.0) == -kInf);
    CHECK(pdf(DistributionKind::LogNormal, make_params(0.5, 0, 1), 0.0) == 0.0);
}

TEST_CASE("cdf hits the hand-checked medians and values") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const ParamSet p = oracle::random_params(DistributionKind::LogNormal, rng);
        CHECK(cdf(DistributionKind::LogNormal, p, p.loc + p.scale) ==
              doctest::Approx(0.5).epsilon(1e-12));
    }
    CHECK(cdf(DistributionKind::Weibull, make_params(1, 0, 1), std::log(2.0)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cdf(DistributionKind::Gamma, make_params(2, 0, 1), 1.0) ==
          doctest::Approx(0.26424111765711535681).epsilon(1e-10));
}

TEST_CASE("cdf respects the support") {
    for (DistributionKind kind : kAllKinds) {
        const ParamSet p = kind == DistributionKind::Beta ? make_beta_params(2, 3, 1.0, 4)
                                                          : make_params(2, 1.0, 4);
        CHECK(cdf(kind, p, 0.999) == 0.0);
        CHECK(cdf(kind, p, 1.0) == 0.0);
    }
    CHECK(cdf(DistributionKind::Beta, make_beta_params(2, 3, 1.0, 4), 5.0) == 1.0);
    CHECK(cdf(DistributionKind::Beta, make_beta_params(2, 3, 1.0, 4), 7.3) == 1.0);
}

TEST_CASE("quantile closed forms and root-finding agree with the cdf") {
    CHECK(quantile(DistributionKind::Weibull, make_params(1, 0, 1), 0.5) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(quantile(DistributionKind::Beta, make_beta_params(1, 1, 0, 1), 0.25) ==
          doctest::Approx(0.25).epsilon(1e-9));
    CHECK(quantile(DistributionKind::Gamma, make_params(2, 0, 1),
                   1.0 - 2.0 * std::exp(-1.0)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("quantile rejects probabilities outside (0, 1)") {
    const ParamSet p = make_params(2, 0, 1);
    CHECK_THROWS_AS(quantile(DistributionKind::Weibull, p, 0.0), std::domain_error);
    CHECK_THROWS_AS(quantile(DistributionKind::Weibull, p, 1.0), std::domain_error);
    CHECK_THROWS_AS(quantile(DistributionKind::Gamma, p, -0.3), std::domain_error);
}

TEST_CASE("round trips between cdf and quantile") {
    std::mt19937_64 rng(23);
    const double probs[] = {0.001, 0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99, 0.999};
    for (DistributionKind kind : kAllKinds) {
        for (int trial = 0; trial < 5; ++trial) {
            const ParamSet p = oracle::random_params(kind, rng);
            for (double prob : probs) {
                const double x = quantile(kind, p, prob);
                CHECK(std::fabs(cdf(kind, p, x) - prob) <= 1e-8);
            }
            for (double prob : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const double x = quantile(kind, p, prob);
                const double back = quantile(kind, p, cdf(kind, p, x));
                CHECK(std::fabs(back - x) <= 1e-6 * (1.0 + std::fabs(x)));
            }
        }
    }
}

TEST_CASE("pdf is the derivative of cdf at interior quantiles") {
    std::mt19937_64 rng(29);
    for (DistributionKind kind : kAllKinds) {
        for (int trial = 0; trial < 4; ++trial) {
            const ParamSet p = oracle::random_params(kind, rng);
            for (double prob : {0.1, 0.25, 0.5, 0.75, 0.9}) {
                const double x = quantile(kind, p, prob);
                const double h = 1e-4 * p.scale;
                const double numeric =
                    oracle::central_diff([&](double t) { return cdf(kind, p, t); }, x, h);
                const double exact = pdf(kind, p, x);
                CHECK(numeric == doctest::Approx(exact).epsilon(1e-4));
            }
        }
    }
}

TEST_CASE("densities integrate to one over the support") {
    std::mt19937_64 rng(31);
    for (DistributionKind kind : kAllKinds) {
        for (int trial = 0; trial < 3; ++trial) {
            const ParamSet p = oracle::random_params(kind, rng);
            const double hi = oracle::support_upper_bound(kind, p);
            const double mass =
                oracle::integrate([&](double x) { return pdf(kind, p, x); }, p.loc, hi);
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("reduced-mode parameter sets evaluate bitwise equal to full mode") {
    // mode is not an argument of pdf/cdf; equal ParamSets must give equal bits
    const ParamSet full_style = make_beta_params(2.5, 1.75, 0.0, 1.0);
    ParamSet reduced_style;
    reduced_style.alpha = 2.5;
    reduced_style.beta = 1.75;
    reduced_style.loc = 0.0;
    reduced_style.scale = 1.0;
    for (int i = 0; i <= 20; ++i) {
        const double x = static_cast<double>(i) / 20.0;
        CHECK(pdf(DistributionKind::Beta, full_style, x) ==
              pdf(DistributionKind::Beta, reduced_style, x));
        CHECK(cdf(DistributionKind::Beta, full_style, x) ==
              cdf(DistributionKind::Beta, reduced_style, x));
    }
}

TEST_CASE("invalid parameter sets are rejected everywhere") {
    ParamSet bad = make_params(-1, 0, 1);
    CHECK_THROWS_AS(pdf(DistributionKind::Weibull, bad, 1.0), std::domain_error);
    bad = make_params(1, -0.5, 1);
    CHECK_THROWS_AS(cdf(DistributionKind::Gamma, bad, 1.0), std::domain_error);
    bad = make_params(1, 0, 0.0);
    CHECK_THROWS_AS(quantile(DistributionKind::Weibull, bad, 0.5), std::domain_error);
    bad = make_params(1, 0, 1);  // missing beta
    CHECK_THROWS_AS(pdf(DistributionKind::Beta, bad, 0.5), std::domain_error);
    bad = make_beta_params(1, 1, 0, 1);  // stray beta
    CHECK_THROWS_AS(pdf(DistributionKind::Weibull, bad, 0.5), std::domain_error);
    CHECK_THROWS_AS(draw_sample(DistributionKind::Gamma, make_params(0, 0, 1), 5, 1),
                    std::domain_error);
}

TEST_CASE("draw_sample is deterministic and rejects empty requests") {
    const ParamSet p = make_params(2, 0, 8);
    CHECK_THROWS_AS(draw_sample(DistributionKind::Weibull, p, 0, 1), std::domain_error);
    const Sample a = draw_sample(DistributionKind::Weibull, p, 500, 42);
    const Sample b = draw_sample(DistributionKind::Weibull, p, 500, 42);
    CHECK(a.values() == b.values());
    const Sample c = draw_sample(DistributionKind::Weibull, p, 500, 43);
    CHECK(a.values() != c.values());
}

TEST_CASE("draw_sample stays inside the support") {
    std::mt19937_64 rng(37);
    for (DistributionKind kind : kAllKinds) {
        const ParamSet p = oracle::random_params(kind, rng);
        const Sample s = draw_sample(kind, p, 2000, 9);
        for (double v : s.values()) {
            CHECK(v >= p.loc);
            if (kind == DistributionKind::Beta) CHECK(v <= p.loc + p.scale);
        }
    }
}

TEST_CASE("draw_sample Monte Carlo mean matches the Weibull formula") {
    // E[X] = scale * Gamma(1 + 1/alpha) = 8 * Gamma(1.5)
    const Sample s = draw_sample(DistributionKind::Weibull, make_params(2, 0, 8), 100000, 1);
    CHECK(std::fabs(oracle::mean(s.values()) - 7.0898154036220641) <= 0.1);
}

}  // TEST_SUITE
