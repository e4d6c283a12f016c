#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "windfit/errors.hpp"
#include "windfit/sample.hpp"

// Observational summaries of a Sample: histogram, ECDF, plotting positions and
// the evaluation grid every model curve is drawn on.

namespace windfit {

struct Histogram {
    std::vector<double> bin_edges;       // ascending, len = bins + 1
    std::vector<std::size_t> counts;     // len = bins, sums to n
    std::vector<double> density;         // normalized so sum(density * width) = 1
};

/// Right-continuous step function; at the i-th order statistic ps = i/n.
/// Ties are kept: duplicated xs carry their cumulative ps.
struct EcdfCurve {
    std::vector<double> xs;
    std::vector<double> ps;
};

struct BinRule {
    enum class Method { Auto, FixedCount };
    Method method = Method::Auto;
    int fixed_count = 0;

    /// Freedman-Diaconis width, falling back to Sturges when the IQR is zero.
    static BinRule automatic() { return BinRule{}; }
    static BinRule fixed(int count) {
        if (count < 1) throw std::domain_error("BinRule: bin count must be positive");
        return BinRule{Method::FixedCount, count};
    }
};

namespace detail {

// Linear interpolation between order statistics (the usual "type 7" rule).
inline double sorted_quantile(const std::vector<double>& sorted, double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline int auto_bin_count(const std::vector<double>& sorted) {
    const auto n = static_cast<double>(sorted.size());
    const double range = sorted.back() - sorted.front();
    const double iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
    double width;
    if (iqr > 0.0) {
        width = 2.0 * iqr / std::cbrt(n);  // Freedman-Diaconis
    } else {
        const double k = std::ceil(std::log2(n)) + 1.0;  // Sturges
        width = range / k;
    }
    if (!(width > 0.0)) return 1;
    const double count = std::ceil(range / width);
    // guard against pathological IQR blowing up the bin count
    return static_cast<int>(std::clamp(count, 1.0, 100000.0));
}

}  // namespace detail

inline EcdfCurve ecdf(const Sample& sample) {
    EcdfCurve curve;
    curve.xs = sample.sorted();
    const auto n = static_cast<double>(curve.xs.size());
    curve.ps.reserve(curve.xs.size());
    for (std::size_t i = 1; i <= curve.xs.size(); ++i)
        curve.ps.push_back(static_cast<double>(i) / n);
    return curve;
}

inline Histogram histogram(const Sample& sample, const BinRule& rule = BinRule::automatic()) {
    if (sample.size() < 2) throw degenerate_error("histogram: need at least two observations");
    const std::vector<double> sorted = sample.sorted();
    const double lo = sorted.front();
    const double hi = sorted.back();
    if (!(hi > lo)) throw degenerate_error("histogram: sample has zero spread");

    const int bins = rule.method == BinRule::Method::FixedCount ? rule.fixed_count
                                                                : detail::auto_bin_count(sorted);

    Histogram h;
    h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i)
        h.bin_edges[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    h.bin_edges.front() = lo;
    h.bin_edges.back() = hi;

    h.counts.assign(static_cast<std::size_t>(bins), 0);
    for (double x : sample.values()) {
        auto idx = static_cast<long>((x - lo) / (hi - lo) * bins);
        idx = std::clamp(idx, 0L, static_cast<long>(bins) - 1L);
        ++h.counts[static_cast<std::size_t>(idx)];
    }

    h.density.resize(static_cast<std::size_t>(bins));
    const auto n = static_cast<double>(sample.size());
    for (std::size_t i = 0; i < h.density.size(); ++i) {
        const double width = h.bin_edges[i + 1] - h.bin_edges[i];
        h.density[i] = static_cast<double>(h.counts[i]) / (n * width);
    }
    return h;
}

/// Hazen positions (i - a)/(n + 1 - 2a), a = 0.5 by default; strictly inside (0, 1).
inline std::vector<double> plotting_positions(std::size_t n, double offset = 0.5) {
    if (n == 0) throw std::domain_error("plotting_positions: n must be positive");
    if (!(offset >= 0.0) || !(offset < 1.0))
        throw std::domain_error("plotting_positions: offset must lie in [0, 1)");
    std::vector<double> ps(n);
    const double denom = static_cast<double>(n) + 1.0 - 2.0 * offset;
    // mirror the upper half so that ps[i] + ps[n-1-i] == 1 holds exactly
    for (std::size_t i = 1; 2 * i <= n + 1; ++i) {
        const double p = (static_cast<double>(i) - offset) / denom;
        ps[i - 1] = p;
        ps[n - i] = 1.0 - p;
    }
    return ps;
}

/// Uniform grid from min(sample) to max(sample) inclusive; 1000 points by default.
inline std::vector<double> evaluation_grid(const Sample& sample, std::size_t points = 1000) {
    if (points < 2) throw std::domain_error("evaluation_grid: need at least two points");
    const double lo = sample.min();
    const double hi = sample.max();
    if (!(hi > lo)) throw degenerate_error("evaluation_grid: sample has zero spread");
    std::vector<double> grid;
    grid.reserve(points);
    for (std::size_t i = 0; i < points; ++i)
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

}  // namespace windfit
