#pragma once

#include <stdexcept>
#include <string>

namespace prs {

// Bad user input: malformed data, invalid thresholds, out-of-range options.
// The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failures (cannot open/read/write). CLI exit code 1.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace prs
