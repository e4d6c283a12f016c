#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "windfit/distributions.hpp"
#include "windfit/empirical.hpp"
#include "windfit/estimation.hpp"
#include "windfit/sample.hpp"

// Quantitative fit assessment: Q-Q reports, the Kolmogorov-Smirnov statistic,
// a tail-deviation metric for the extreme-value comparison, and cross-model
// ranking. Ranking is by log-likelihood; KS and tail deviation are reported
// alongside, with a separate tail winner.

namespace windfit {

struct QQReport {
    FittedModel model;
    std::vector<double> theoretical_q;  // model quantiles at plotting positions [m/s]
    std::vector<double> empirical_q;    // order statistics [m/s]
    double max_abs_dev = 0.0;
    double tail_abs_dev = 0.0;  // max deviation over the outer tail_fraction of positions
};

struct ModelDiagnostics {
    DistributionKind kind;
    ParametrizationMode mode;
    double log_likelihood;
    double aic;
    double ks_statistic;
    double max_abs_dev;
    double tail_abs_dev;
    bool converged;
};

struct FitComparison {
    std::vector<ModelDiagnostics> per_model;  // fixed kind order
    std::vector<DistributionKind> ranking;    // best first
    DistributionKind winner;
    DistributionKind tail_winner;
};

inline QQReport qq_report(const FittedModel& model, const Sample& sample,
                          double tail_fraction = 0.05) {
    QQReport report;
    report.model = model;
    report.empirical_q = sample.sorted();
    const std::vector<double> positions = plotting_positions(sample.size());
    report.theoretical_q.reserve(positions.size());
    for (double p : positions)
        report.theoretical_q.push_back(quantile(model.spec.kind, model.params, p));

    for (std::size_t i = 0; i < positions.size(); ++i) {
        const double dev = std::fabs(report.theoretical_q[i] - report.empirical_q[i]);
        report.max_abs_dev = std::max(report.max_abs_dev, dev);
        if (positions[i] < tail_fraction || positions[i] > 1.0 - tail_fraction)
            report.tail_abs_dev = std::max(report.tail_abs_dev, dev);
    }
    return report;
}

/// D_n = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n) over the sorted sample.
inline double ks_statistic(const FittedModel& model, const Sample& sample) {
    const std::vector<double> sorted = sample.sorted();
    const auto n = static_cast<double>(sorted.size());
    double dn = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(model.spec.kind, model.params, sorted[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        dn = std::max({dn, hi, lo});
    }
    return dn;
}

namespace detail {

inline int kind_order(DistributionKind kind) {
    switch (kind) {
        case DistributionKind::LogNormal: return 0;
        case DistributionKind::Weibull: return 1;
        case DistributionKind::Gamma: return 2;
        case DistributionKind::Beta: return 3;
    }
    return 4;
}

}  // namespace detail

/// Ranks >= 2 models fitted on the same sample. Ordering: log-likelihood
/// descending, then AIC, then fewer free parameters, then the fixed kind order.
inline FitComparison compare(const std::vector<FittedModel>& models, const Sample& sample,
                             double tail_fraction = 0.05) {
    if (models.size() < 2) throw std::domain_error("compare: need at least two models");
    for (const FittedModel& m : models)
        if (m.n != sample.size())
            throw std::domain_error("compare: model was fitted on a different sample");

    FitComparison cmp;
    cmp.per_model.reserve(models.size());
    for (const FittedModel& m : models) {
        const QQReport qq = qq_report(m, sample, tail_fraction);
        cmp.per_model.push_back({m.spec.kind, m.spec.mode, m.log_likelihood, m.aic,
                                 ks_statistic(m, sample), qq.max_abs_dev, qq.tail_abs_dev,
                                 m.converged});
    }
    std::sort(cmp.per_model.begin(), cmp.per_model.end(),
              [](const ModelDiagnostics& a, const ModelDiagnostics& b) {
                  if (a.kind != b.kind) return detail::kind_order(a.kind) < detail::kind_order(b.kind);
                  return a.mode < b.mode;
              });

    std::vector<std::size_t> idx(cmp.per_model.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const auto& rows = cmp.per_model;
    const auto free_params = [&](std::size_t i) {
        return free_param_count(DistributionSpec{rows[i].kind, rows[i].mode});
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (rows[a].log_likelihood != rows[b].log_likelihood)
            return rows[a].log_likelihood > rows[b].log_likelihood;
        if (rows[a].aic != rows[b].aic) return rows[a].aic < rows[b].aic;
        if (free_params(a) != free_params(b)) return free_params(a) < free_params(b);
        return detail::kind_order(rows[a].kind) < detail::kind_order(rows[b].kind);
    });
    cmp.ranking.reserve(idx.size());
    for (std::size_t i : idx) cmp.ranking.push_back(rows[i].kind);
    cmp.winner = cmp.ranking.front();

    std::size_t best_tail = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].tail_abs_dev < rows[best_tail].tail_abs_dev) best_tail = i;
    cmp.tail_winner = rows[best_tail].kind;
    return cmp;
}

}  // namespace windfit
