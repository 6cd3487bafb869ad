#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infhecke {

/// Input does not match a required normal-form pattern (e.g. solveZ1Z2).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A linear decomposition that is guaranteed by the structure theory failed;
/// reaching this indicates corrupted input or a bug, so it is fatal.
struct DecompositionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A truncated-basis computation would exceed the configured size guard.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset(offset) {}
    std::size_t offset;
};

}  // namespace infhecke
