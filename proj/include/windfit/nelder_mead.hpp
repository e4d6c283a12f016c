#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

// Derivative-free simplex minimizer (Nelder-Mead) with the classic
// coefficients: reflection 1, expansion 2, contraction 0.5, shrink 0.5.
// Convergence is declared when the simplex diameter (max L-inf distance from
// the best vertex) drops below tol.

namespace windfit {

struct SimplexOptions {
    double tol = 1e-9;
    int max_iter = 20000;
    double initial_step = 0.25;
};

struct SimplexResult {
    std::vector<double> point;
    double value = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

template <typename F>
SimplexResult simplex_minimize(F&& objective, const std::vector<double>& start,
                               const SimplexOptions& opt = {}) {
    const std::size_t dim = start.size();
    const auto eval = [&](const std::vector<double>& x) {
        const double v = objective(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    std::vector<std::vector<double>> verts(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) verts[i + 1][i] += opt.initial_step;
    std::vector<double> vals(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) vals[i] = eval(verts[i]);

    const auto order = [&] {
        std::vector<std::size_t> idx(dim + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> v2;
        std::vector<double> f2;
        v2.reserve(dim + 1);
        f2.reserve(dim + 1);
        for (std::size_t i : idx) {
            v2.push_back(std::move(verts[i]));
            f2.push_back(vals[i]);
        }
        verts = std::move(v2);
        vals = std::move(f2);
    };

    const auto diameter = [&] {
        double d = 0.0;
        for (std::size_t i = 1; i <= dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                d = std::max(d, std::fabs(verts[i][j] - verts[0][j]));
        return d;
    };

    SimplexResult result;
    for (result.iterations = 0; result.iterations < opt.max_iter; ++result.iterations) {
        order();
        if (diameter() < opt.tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += verts[i][j];
        for (double& c : centroid) c /= static_cast<double>(dim);

        const auto blend = [&](double coef) {
            std::vector<double> x(dim);
            for (std::size_t j = 0; j < dim; ++j)
                x[j] = centroid[j] + coef * (centroid[j] - verts[dim][j]);
            return x;
        };

        const std::vector<double> reflected = blend(1.0);
        const double fr = eval(reflected);
        if (fr < vals[0]) {
            const std::vector<double> expanded = blend(2.0);
            const double fe = eval(expanded);
            if (fe < fr) {
                verts[dim] = expanded;
                vals[dim] = fe;
            } else {
                verts[dim] = reflected;
                vals[dim] = fr;
            }
            continue;
        }
        if (fr < vals[dim - 1]) {
            verts[dim] = reflected;
            vals[dim] = fr;
            continue;
        }

        if (fr < vals[dim]) {
            const std::vector<double> outside = blend(0.5);
            const double fc = eval(outside);
            if (fc <= fr) {
                verts[dim] = outside;
                vals[dim] = fc;
                continue;
            }
        } else {
            const std::vector<double> inside = blend(-0.5);
            const double fc = eval(inside);
            if (fc < vals[dim]) {
                verts[dim] = inside;
                vals[dim] = fc;
                continue;
            }
        }

        // shrink toward the best vertex
        for (std::size_t i = 1; i <= dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j)
                verts[i][j] = verts[0][j] + 0.5 * (verts[i][j] - verts[0][j]);
            vals[i] = eval(verts[i]);
        }
    }

    order();
    result.point = verts[0];
    result.value = vals[0];
    return result;
}

}  // namespace windfit
