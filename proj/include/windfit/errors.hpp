#pragma once

#include <stdexcept>
#include <string>

namespace windfit {

/// A file could not be opened or read.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parsing produced no usable rows, or an operation received an empty dataset.
class empty_dataset_error : public std::runtime_error {
public:
    explicit empty_dataset_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The sample is too small or has no spread to support the requested operation.
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace windfit
