#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace tmatch {

// Input could not be parsed; `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

// A parameter guard tripped (vertex-cover budget, representative-family
// dimension, oracle budget). Callers map this to exit code 3.
struct GuardError : std::runtime_error {
    GuardError(std::string guard_, const std::string& what_,
               std::optional<int> window_ = std::nullopt)
        : std::runtime_error(what_), guard(std::move(guard_)), window(window_) {}
    std::string guard;
    std::optional<int> window;  // offending window index, when known
};

}  // namespace tmatch
