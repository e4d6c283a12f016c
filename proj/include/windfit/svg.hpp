#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "windfit/errors.hpp"

// Minimal native SVG charts: axes with nice ticks, polylines, step lines,
// bars and scatter points. Figures are outputs, not a test surface; the
// csv-points mode of the CLI exists for machine consumption.

namespace windfit::svg {

using Point = std::pair<double, double>;

struct Series {
    enum class Style { Line, Steps, Points, Bars };
    Style style;
    std::vector<Point> points;            // Bars: (center, height) with uniform width
    std::vector<double> widths;           // Bars only, per-bar width
    std::string color;
    std::string label;
};

class Chart {
public:
    Chart(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void add_line(std::vector<Point> pts, std::string color, std::string label) {
        series_.push_back({Series::Style::Line, std::move(pts), {}, std::move(color),
                           std::move(label)});
    }
    void add_steps(std::vector<Point> pts, std::string color, std::string label) {
        series_.push_back({Series::Style::Steps, std::move(pts), {}, std::move(color),
                           std::move(label)});
    }
    void add_points(std::vector<Point> pts, std::string color, std::string label) {
        series_.push_back({Series::Style::Points, std::move(pts), {}, std::move(color),
                           std::move(label)});
    }
    void add_bars(std::vector<Point> centers_heights, std::vector<double> widths,
                  std::string color, std::string label) {
        series_.push_back({Series::Style::Bars, std::move(centers_heights), std::move(widths),
                           std::move(color), std::move(label)});
    }

    std::string render() const;

private:
    static constexpr int kWidth = 720;
    static constexpr int kHeight = 480;
    static constexpr int kMarginLeft = 64;
    static constexpr int kMarginRight = 20;
    static constexpr int kMarginTop = 36;
    static constexpr int kMarginBottom = 48;

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// tick step of the form {1,2,5} * 10^k covering the span with ~5 intervals
inline double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5) return mag;
    if (r < 3.5) return 2.0 * mag;
    if (r < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

}  // namespace detail

inline std::string Chart::render() const {
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool first = true;
    for (const Series& s : series_) {
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            const auto [x, y] = s.points[i];
            double x_lo = x, x_hi = x, y_lo = y, y_hi = y;
            if (s.style == Series::Style::Bars) {
                const double half = s.widths[i] / 2.0;
                x_lo -= half;
                x_hi += half;
                y_lo = std::min(0.0, y);
            }
            if (first) {
                x_min = x_lo, x_max = x_hi, y_min = y_lo, y_max = y_hi;
                first = false;
            } else {
                x_min = std::min(x_min, x_lo), x_max = std::max(x_max, x_hi);
                y_min = std::min(y_min, y_lo), y_max = std::max(y_max, y_hi);
            }
        }
    }
    if (!(x_max > x_min)) x_max = x_min + 1.0;
    if (!(y_max > y_min)) y_max = y_min + 1.0;
    const double x_pad = 0.02 * (x_max - x_min);
    const double y_pad = 0.04 * (y_max - y_min);
    x_min -= x_pad, x_max += x_pad;
    y_max += y_pad;
    if (y_min > 0.0 && y_min < 0.3 * y_max) y_min = 0.0;  // anchor density-like axes at zero

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto px = [&](double x) {
        return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w;
    };
    const auto py = [&](double y) {
        return kMarginTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
           "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
           std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + std::to_string(kWidth / 2) +
           "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
           title_ + "</text>\n";

    // axes
    out += "<line x1=\"" + detail::fmt(px(x_min)) + "\" y1=\"" + detail::fmt(py(y_min)) +
           "\" x2=\"" + detail::fmt(px(x_max)) + "\" y2=\"" + detail::fmt(py(y_min)) +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + detail::fmt(px(x_min)) + "\" y1=\"" + detail::fmt(py(y_min)) +
           "\" x2=\"" + detail::fmt(px(x_min)) + "\" y2=\"" + detail::fmt(py(y_max)) +
           "\" stroke=\"black\"/>\n";

    const double x_step = detail::nice_step(x_max - x_min);
    for (double t = std::ceil(x_min / x_step) * x_step; t <= x_max + 1e-12 * x_step;
         t += x_step) {
        out += "<line x1=\"" + detail::fmt(px(t)) + "\" y1=\"" + detail::fmt(py(y_min)) +
               "\" x2=\"" + detail::fmt(px(t)) + "\" y2=\"" + detail::fmt(py(y_min) + 5) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + detail::fmt(px(t)) + "\" y=\"" + detail::fmt(py(y_min) + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               detail::fmt(t) + "</text>\n";
    }
    const double y_step = detail::nice_step(y_max - y_min);
    for (double t = std::ceil(y_min / y_step) * y_step; t <= y_max + 1e-12 * y_step;
         t += y_step) {
        out += "<line x1=\"" + detail::fmt(px(x_min) - 5) + "\" y1=\"" + detail::fmt(py(t)) +
               "\" x2=\"" + detail::fmt(px(x_min)) + "\" y2=\"" + detail::fmt(py(t)) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + detail::fmt(px(x_min) - 8) + "\" y=\"" + detail::fmt(py(t) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               detail::fmt(t) + "</text>\n";
    }
    out += "<text x=\"" + std::to_string(kMarginLeft + static_cast<int>(plot_w) / 2) + "\" y=\"" +
           std::to_string(kHeight - 10) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + x_label_ +
           "</text>\n";
    out += "<text x=\"14\" y=\"" + std::to_string(kMarginTop + static_cast<int>(plot_h) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 " +
           std::to_string(kMarginTop + static_cast<int>(plot_h) / 2) + ")\">" + y_label_ +
           "</text>\n";

    int legend_y = kMarginTop + 8;
    for (const Series& s : series_) {
        switch (s.style) {
            case Series::Style::Line:
            case Series::Style::Steps: {
                std::string path;
                for (std::size_t i = 0; i < s.points.size(); ++i) {
                    const auto [x, y] = s.points[i];
                    if (i == 0) {
                        path += "M" + detail::fmt(px(x)) + " " + detail::fmt(py(y));
                    } else if (s.style == Series::Style::Steps) {
                        path += " H" + detail::fmt(px(x)) + " V" + detail::fmt(py(y));
                    } else {
                        path += " L" + detail::fmt(px(x)) + " " + detail::fmt(py(y));
                    }
                }
                out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + s.color +
                       "\" stroke-width=\"1.5\"/>\n";
                break;
            }
            case Series::Style::Points:
                for (const auto& [x, y] : s.points)
                    out += "<circle cx=\"" + detail::fmt(px(x)) + "\" cy=\"" + detail::fmt(py(y)) +
                           "\" r=\"2\" fill=\"" + s.color + "\"/>\n";
                break;
            case Series::Style::Bars:
                for (std::size_t i = 0; i < s.points.size(); ++i) {
                    const auto [cx, h] = s.points[i];
                    const double w = s.widths[i];
                    out += "<rect x=\"" + detail::fmt(px(cx - w / 2)) + "\" y=\"" +
                           detail::fmt(py(h)) + "\" width=\"" +
                           detail::fmt(px(cx + w / 2) - px(cx - w / 2)) + "\" height=\"" +
                           detail::fmt(py(0.0) - py(h)) + "\" fill=\"" + s.color +
                           "\" fill-opacity=\"0.55\"/>\n";
                }
                break;
        }
        if (!s.label.empty()) {
            out += "<rect x=\"" + std::to_string(kWidth - kMarginRight - 150) + "\" y=\"" +
                   std::to_string(legend_y - 9) + "\" width=\"10\" height=\"10\" fill=\"" +
                   s.color + "\"/>\n";
            out += "<text x=\"" + std::to_string(kWidth - kMarginRight - 136) + "\" y=\"" +
                   std::to_string(legend_y) +
                   "\" font-family=\"sans-serif\" font-size=\"11\">" + s.label + "</text>\n";
            legend_y += 16;
        }
    }
    out += "</svg>\n";
    return out;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw io_error("cannot write " + path.string());
    out << content;
    if (!out.good()) throw io_error("write failure on " + path.string());
}

}  // namespace windfit::svg
