#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "windfit/distributions.hpp"
#include "windfit/errors.hpp"
#include "windfit/nelder_mead.hpp"
#include "windfit/sample.hpp"
#include "windfit/specfun.hpp"

// Maximum-likelihood fitting. The simplex search runs over an unconstrained
// reparametrization: log-transform for alpha, beta and scale; in Full mode the
// location is mapped through a sigmoid onto [0, min(sample) - eps] with
// eps = eps_factor * (max - min), keeping loc >= 0 at the lower end and the
// likelihood finite at the upper one. Full-mode Beta additionally keeps
// loc + scale >= max(sample) + eps so the data stay covered.

namespace windfit {

struct DistributionSpec {
    DistributionKind kind = DistributionKind::Weibull;
    ParametrizationMode mode = ParametrizationMode::Reduced;

    bool operator==(const DistributionSpec&) const = default;
};

struct FitSettings {
    double tol = 1e-9;            // simplex diameter, transformed space
    int max_iter = 20000;
    double eps_factor = 1e-6;     // support guard, fraction of the data range
};

/// Number of free parameters: 2 in Reduced mode, 3 Full, 4 for Full Beta.
inline int free_param_count(const DistributionSpec& spec) {
    if (spec.mode == ParametrizationMode::Reduced) return 2;
    return spec.kind == DistributionKind::Beta ? 4 : 3;
}

struct FittedModel {
    DistributionSpec spec;
    ParamSet params;
    double log_likelihood = -std::numeric_limits<double>::infinity();
    std::size_t n = 0;
    bool converged = false;
    int iterations = 0;
    double aic = std::numeric_limits<double>::infinity();
};

/// -sum(log_pdf). Returns +inf when any observation falls outside the support
/// or sits on a singular support edge — infeasible parameters, not an error.
inline double neg_log_likelihood(const DistributionSpec& spec, const ParamSet& params,
                                 const Sample& sample) {
    validate_params(spec.kind, params);
    double total = 0.0;
    for (double x : sample.values()) {
        const double lp = log_pdf(spec.kind, params, x);
        if (!std::isfinite(lp)) return std::numeric_limits<double>::infinity();
        total -= lp;
    }
    return total;
}

namespace detail {

struct SampleStats {
    double min, max, mean, var, range;
};

inline SampleStats sample_stats(const Sample& sample) {
    SampleStats s{};
    s.min = sample.min();
    s.max = sample.max();
    const auto n = static_cast<double>(sample.size());
    double acc = 0.0;
    for (double x : sample.values()) acc += x;
    s.mean = acc / n;
    double sq = 0.0;
    for (double x : sample.values()) sq += (x - s.mean) * (x - s.mean);
    s.var = sq / n;
    s.range = s.max - s.min;
    return s;
}

inline void require_fittable(const Sample& sample, const SampleStats& stats) {
    if (sample.size() < 8)
        throw degenerate_error("fit: need at least 8 observations, got " +
                               std::to_string(sample.size()));
    if (!(stats.var > 0.0)) throw degenerate_error("fit: sample has zero variance");
}

inline double stable_sigmoid(double t) {
    if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

inline double logit(double r) {
    r = std::clamp(r, 1e-12, 1.0 - 1e-12);
    return std::log(r) - std::log1p(-r);
}

// Maps between the optimizer's unconstrained coordinates and a valid ParamSet.
class ParamTransform {
public:
    ParamTransform(const DistributionSpec& spec, const SampleStats& stats, double eps_factor)
        : spec_(spec),
          eps_(eps_factor * stats.range),
          loc_cap_(std::max(0.0, stats.min - eps_factor * stats.range)),
          cover_(stats.max) {}

    int dim() const { return free_param_count(spec_); }

    ParamSet to_params(std::span<const double> theta) const {
        ParamSet p;
        p.alpha = std::exp(theta[0]);
        std::size_t i = 1;
        if (spec_.kind == DistributionKind::Beta) p.beta = std::exp(theta[i++]);
        if (spec_.mode == ParametrizationMode::Reduced) {
            p.loc = 0.0;
            p.scale = spec_.kind == DistributionKind::Beta ? 1.0 : std::exp(theta[i]);
        } else {
            if (spec_.kind == DistributionKind::Beta) {
                p.loc = loc_cap_ * stable_sigmoid(theta[i + 1]);
                p.scale = (cover_ + eps_ - p.loc) + std::exp(theta[i]);
            } else {
                p.scale = std::exp(theta[i]);
                p.loc = loc_cap_ * stable_sigmoid(theta[i + 1]);
            }
        }
        return p;
    }

    std::vector<double> to_theta(const ParamSet& p) const {
        std::vector<double> theta;
        theta.reserve(static_cast<std::size_t>(dim()));
        theta.push_back(std::log(p.alpha));
        if (spec_.kind == DistributionKind::Beta) theta.push_back(std::log(*p.beta));
        if (spec_.mode == ParametrizationMode::Reduced) {
            if (spec_.kind != DistributionKind::Beta) theta.push_back(std::log(p.scale));
        } else if (spec_.kind == DistributionKind::Beta) {
            const double slack = std::max(p.scale - (cover_ + eps_ - p.loc), 1e-9);
            theta.push_back(std::log(slack));
            theta.push_back(loc_theta(p.loc));
        } else {
            theta.push_back(std::log(p.scale));
            theta.push_back(loc_theta(p.loc));
        }
        return theta;
    }

private:
    double loc_theta(double loc) const {
        if (loc_cap_ <= 0.0) return 0.0;  // location pinned at zero
        return logit(loc / loc_cap_);
    }

    DistributionSpec spec_;
    double eps_;
    double loc_cap_;
    double cover_;
};

inline double log_moment_shape(const Sample& sample, double loc, double* log_scale) {
    double m = 0.0, count = 0.0;
    std::vector<double> logs;
    logs.reserve(sample.size());
    for (double x : sample.values()) {
        if (x > loc) {
            logs.push_back(std::log(x - loc));
            m += logs.back();
            count += 1.0;
        }
    }
    if (count < 2.0) throw degenerate_error("fit: too few observations above the location guess");
    m /= count;
    double sq = 0.0;
    for (double lx : logs) sq += (lx - m) * (lx - m);
    *log_scale = m;
    return std::max(std::sqrt(sq / count), 1e-3);
}

}  // namespace detail

/// Method-of-moments starting point; always a valid ParamSet.
inline ParamSet initial_guess(const DistributionSpec& spec, const Sample& sample) {
    const detail::SampleStats stats = detail::sample_stats(sample);
    detail::require_fittable(sample, stats);

    const bool full = spec.mode == ParametrizationMode::Full;
    const double loc0 = full ? std::max(0.0, stats.min - 0.01 * stats.range) : 0.0;

    ParamSet p;
    p.loc = loc0;
    switch (spec.kind) {
        case DistributionKind::LogNormal: {
            double log_scale = 0.0;
            p.alpha = detail::log_moment_shape(sample, loc0, &log_scale);
            p.scale = std::exp(log_scale);
            break;
        }
        case DistributionKind::Weibull: {
            const double mean = stats.mean - loc0;
            const double cv = std::sqrt(stats.var) / mean;
            // Justus' power-law approximation of the shape from the CV
            p.alpha = std::clamp(std::pow(cv, -1.086), 0.02, 100.0);
            p.scale = mean / std::exp(specfun::ln_gamma(1.0 + 1.0 / p.alpha));
            break;
        }
        case DistributionKind::Gamma: {
            const double mean = stats.mean - loc0;
            p.alpha = std::clamp(mean * mean / stats.var, 1e-3, 1e6);
            p.scale = stats.var / mean;
            break;
        }
        case DistributionKind::Beta: {
            double scale0 = 1.0;
            if (full) scale0 = stats.range * 1.02;
            // moments of the affinely mapped data; valid only when they land in (0,1)
            const double m = (stats.mean - loc0) / scale0;
            const double v = stats.var / (scale0 * scale0);
            if (m > 0.0 && m < 1.0 && v > 0.0 && v < m * (1.0 - m)) {
                const double common = m * (1.0 - m) / v - 1.0;
                p.alpha = std::clamp(m * common, 1e-2, 1e4);
                p.beta = std::clamp((1.0 - m) * common, 1e-2, 1e4);
            } else {
                p.alpha = 1.0;
                p.beta = 1.0;
            }
            p.scale = scale0;
            break;
        }
    }
    validate_params(spec.kind, p);
    return p;
}

/// Maximum-likelihood fit by simplex search. Non-convergence is reported via
/// the converged flag, never as an error.
inline FittedModel fit(const DistributionSpec& spec, const Sample& sample,
                       const FitSettings& settings = {}) {
    const detail::SampleStats stats = detail::sample_stats(sample);
    detail::require_fittable(sample, stats);

    const ParamSet guess = initial_guess(spec, sample);
    const detail::ParamTransform transform(spec, stats, settings.eps_factor);

    const auto objective = [&](const std::vector<double>& theta) {
        return neg_log_likelihood(spec, transform.to_params(theta), sample);
    };

    SimplexOptions options;
    options.tol = settings.tol;
    options.max_iter = settings.max_iter;

    SimplexResult run = simplex_minimize(objective, transform.to_theta(guess), options);
    if (!run.converged) {
        // one restart from the best point with a fresh simplex
        SimplexResult second = simplex_minimize(objective, run.point, options);
        second.iterations += run.iterations;
        run = std::move(second);
    }

    FittedModel model;
    model.spec = spec;
    model.params = transform.to_params(run.point);
    model.log_likelihood = -run.value;
    model.n = sample.size();
    model.iterations = run.iterations;
    model.converged = run.converged && std::isfinite(run.value);
    model.aic = 2.0 * free_param_count(spec) - 2.0 * model.log_likelihood;
    return model;
}

/// Fits all four kinds under one mode, in the fixed order
/// LogNormal, Weibull, Gamma, Beta.
inline std::vector<FittedModel> fit_all(const Sample& sample, ParametrizationMode mode,
                                        const FitSettings& settings = {}) {
    std::vector<FittedModel> models;
    models.reserve(4);
    for (DistributionKind kind : kAllKinds)
        models.push_back(fit(DistributionSpec{kind, mode}, sample, settings));
    return models;
}

}  // namespace windfit
