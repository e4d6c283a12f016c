#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "windfit/sample.hpp"
#include "windfit/specfun.hpp"

// The four candidate wind-speed families in shape-location-scale form.
//
// Every family has support [loc, inf) except Beta, whose support is
// [loc, loc + scale]. Densities with shape < 1 diverge at the left support
// edge; pdf reports that as +inf and log_pdf as +inf rather than hiding it.

namespace windfit {

enum class DistributionKind { LogNormal, Weibull, Gamma, Beta };

/// Reduced fixes loc = 0 for LogNormal/Weibull/Gamma and loc = 0, scale = 1 for Beta.
enum class ParametrizationMode { Full, Reduced };

inline constexpr DistributionKind kAllKinds[4] = {
    DistributionKind::LogNormal, DistributionKind::Weibull, DistributionKind::Gamma,
    DistributionKind::Beta};

inline std::string_view kind_name(DistributionKind kind) {
    switch (kind) {
        case DistributionKind::LogNormal: return "lognormal";
        case DistributionKind::Weibull: return "weibull";
        case DistributionKind::Gamma: return "gamma";
        case DistributionKind::Beta: return "beta";
    }
    throw std::domain_error("kind_name: unknown distribution kind");
}

inline std::string_view mode_name(ParametrizationMode mode) {
    return mode == ParametrizationMode::Full ? "full" : "reduced";
}

/// Parameter vector {alpha, beta?, loc, scale}. beta is present iff the family is Beta.
struct ParamSet {
    double alpha = 1.0;             // shape
    std::optional<double> beta{};   // second shape, Beta only
    double loc = 0.0;               // support shift [m/s]
    double scale = 1.0;             // axis stretch [m/s]

    bool operator==(const ParamSet&) const = default;
};

inline bool params_valid(DistributionKind kind, const ParamSet& p) {
    if (!std::isfinite(p.alpha) || p.alpha <= 0.0) return false;
    if (!std::isfinite(p.loc) || p.loc < 0.0) return false;
    if (!std::isfinite(p.scale) || p.scale <= 0.0) return false;
    const bool needs_beta = kind == DistributionKind::Beta;
    if (needs_beta != p.beta.has_value()) return false;
    if (needs_beta && (!std::isfinite(*p.beta) || *p.beta <= 0.0)) return false;
    return true;
}

inline void validate_params(DistributionKind kind, const ParamSet& p) {
    if (!params_valid(kind, p))
        throw std::domain_error("invalid parameter set for " + std::string(kind_name(kind)));
}

/// ln(pdf), computed without forming the pdf. Returns -inf where the density is
/// zero and +inf at a singular left (or, for Beta, right) support edge.
inline double log_pdf(DistributionKind kind, const ParamSet& p, double x) {
    validate_params(kind, p);
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (!std::isfinite(x)) return -inf;
    if (x < p.loc) return -inf;

    const double z = (x - p.loc) / p.scale;
    switch (kind) {
        case DistributionKind::LogNormal: {
            if (x == p.loc) return -inf;  // density vanishes in the limit
            const double t = (std::log(x - p.loc) - std::log(p.scale)) / p.alpha;
            return -std::log(x - p.loc) - std::log(p.alpha) -
                   0.5 * std::log(2.0 * std::numbers::pi) - 0.5 * t * t;
        }
        case DistributionKind::Weibull: {
            if (z == 0.0) {
                if (p.alpha > 1.0) return -inf;
                if (p.alpha < 1.0) return inf;
                return -std::log(p.scale);
            }
            return std::log(p.alpha) - std::log(p.scale) + (p.alpha - 1.0) * std::log(z) -
                   std::pow(z, p.alpha);
        }
        case DistributionKind::Gamma: {
            if (z == 0.0) {
                if (p.alpha > 1.0) return -inf;
                if (p.alpha < 1.0) return inf;
                return -std::log(p.scale);
            }
            return (p.alpha - 1.0) * std::log(z) - z - std::log(p.scale) -
                   specfun::ln_gamma(p.alpha);
        }
        case DistributionKind::Beta: {
            const double b = *p.beta;
            if (z > 1.0) return -inf;
            const double ln_norm = specfun::ln_gamma(p.alpha + b) - specfun::ln_gamma(p.alpha) -
                                   specfun::ln_gamma(b) - std::log(p.scale);
            if (z == 0.0) {
                if (p.alpha > 1.0) return -inf;
                if (p.alpha < 1.0) return inf;
                return ln_norm;
            }
            if (z == 1.0) {
                if (b > 1.0) return -inf;
                if (b < 1.0) return inf;
                return ln_norm;
            }
            return ln_norm + (p.alpha - 1.0) * std::log(z) + (b - 1.0) * std::log1p(-z);
        }
    }
    throw std::domain_error("log_pdf: unknown distribution kind");
}

/// Probability density. Zero outside the support, +inf at singular edges.
inline double pdf(DistributionKind kind, const ParamSet& p, double x) {
    return std::exp(log_pdf(kind, p, x));
}

/// Cumulative distribution function; monotone nondecreasing, 0 at and below loc.
inline double cdf(DistributionKind kind, const ParamSet& p, double x) {
    validate_params(kind, p);
    if (std::isnan(x)) throw std::domain_error("cdf: argument must not be NaN");
    if (x <= p.loc) return 0.0;

    const double z = (x - p.loc) / p.scale;
    switch (kind) {
        case DistributionKind::LogNormal:
            return specfun::std_normal_cdf((std::log(x - p.loc) - std::log(p.scale)) / p.alpha);
        case DistributionKind::Weibull:
            return -std::expm1(-std::pow(z, p.alpha));
        case DistributionKind::Gamma:
            return specfun::reg_inc_gamma_P(p.alpha, z);
        case DistributionKind::Beta:
            if (z >= 1.0) return 1.0;
            return specfun::reg_inc_beta_I(p.alpha, *p.beta, z);
    }
    throw std::domain_error("cdf: unknown distribution kind");
}

namespace detail {

// Bisection on the cdf; used where no closed-form inverse exists.
inline double quantile_by_bisection(DistributionKind kind, const ParamSet& p, double prob,
                                    double lo, double hi) {
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f = cdf(kind, p, mid);
        if (std::fabs(f - prob) <= 1e-10) return mid;
        if (f < prob)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= std::numeric_limits<double>::epsilon() * (std::fabs(hi) + 1.0)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Inverse CDF for prob strictly inside (0, 1).
inline double quantile(DistributionKind kind, const ParamSet& p, double prob) {
    validate_params(kind, p);
    if (!(prob > 0.0) || !(prob < 1.0))
        throw std::domain_error("quantile: probability must lie strictly in (0, 1)");

    switch (kind) {
        case DistributionKind::LogNormal:
            return p.loc + p.scale * std::exp(p.alpha * specfun::std_normal_quantile(prob));
        case DistributionKind::Weibull:
            return p.loc + p.scale * std::pow(-std::log1p(-prob), 1.0 / p.alpha);
        case DistributionKind::Gamma: {
            double hi = p.loc + p.scale * std::max(1.0, p.alpha + 10.0 * std::sqrt(p.alpha));
            while (cdf(kind, p, hi) < prob) {
                hi = p.loc + 2.0 * (hi - p.loc);
                if (!std::isfinite(hi)) throw std::domain_error("quantile: bracket overflow");
            }
            return detail::quantile_by_bisection(kind, p, prob, p.loc, hi);
        }
        case DistributionKind::Beta:
            return detail::quantile_by_bisection(kind, p, prob, p.loc, p.loc + p.scale);
    }
    throw std::domain_error("quantile: unknown distribution kind");
}

/// n inverse-transform draws, deterministic in (kind, p, n, seed).
/// The generator is mt19937_64; uniforms are taken in the open interval (0, 1).
inline Sample draw_sample(DistributionKind kind, const ParamSet& p, std::size_t n,
                          std::uint64_t seed) {
    validate_params(kind, p);
    if (n == 0) throw std::domain_error("draw_sample: need at least one draw");

    std::mt19937_64 rng(seed);
    std::vector<double> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // (k + 0.5) * 2^-53 with k in [0, 2^53): uniform, strictly inside (0, 1)
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        values.push_back(quantile(kind, p, u));
    }
    std::string label = std::string(kind_name(kind)) + " draws (seed " + std::to_string(seed) + ")";
    return Sample(std::move(values), std::move(label));
}

}  // namespace windfit
