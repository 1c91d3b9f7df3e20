#pragma once

#include <stdexcept>
#include <string>

namespace jacsyz {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input; `pos` is a byte offset into the source string.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
    std::size_t pos;
};

/// Mathematically invalid input (non-reduced curve, wrong degree, ...).
struct input_error : error {
    using error::error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

}  // namespace jacsyz
