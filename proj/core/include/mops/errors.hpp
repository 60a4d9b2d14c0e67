#pragma once

#include <stdexcept>
#include <string>

namespace mops {

// Bad parameters / malformed input.  The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical procedure failed (isolation, continuation, precision budget).
// The CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mops
