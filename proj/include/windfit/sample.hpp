#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace windfit {

/// A validated one-dimensional series of wind speeds [m/s] with provenance.
/// Invariants: nonempty, all values finite and >= 0.
class Sample {
public:
    Sample(std::vector<double> values, std::string source_label)
        : values_(std::move(values)), source_label_(std::move(source_label)) {
        if (values_.empty()) throw std::domain_error("Sample: values must be nonempty");
        for (double v : values_) {
            if (!std::isfinite(v)) throw std::domain_error("Sample: values must be finite");
            if (v < 0.0) throw std::domain_error("Sample: wind speeds must be nonnegative");
        }
    }

    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& source_label() const noexcept { return source_label_; }
    std::size_t size() const noexcept { return values_.size(); }

    double min() const { return *std::min_element(values_.begin(), values_.end()); }
    double max() const { return *std::max_element(values_.begin(), values_.end()); }

    std::vector<double> sorted() const {
        std::vector<double> s = values_;
        std::sort(s.begin(), s.end());
        return s;
    }

private:
    std::vector<double> values_;
    std::string source_label_;
};

}  // namespace windfit
