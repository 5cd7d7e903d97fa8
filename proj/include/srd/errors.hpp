#pragma once

#include <stdexcept>
#include <string>

namespace srd {

// Bad argument (family parameter below minimum, malformed input, ...).
class InvalidParameterError : public std::invalid_argument {
public:
    explicit InvalidParameterError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Graph exceeds the configured cap of an exact engine.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

// Parameter is in range but explicitly carved out (no construction exists).
class ExcludedCaseError : public std::runtime_error {
public:
    explicit ExcludedCaseError(const std::string& what)
        : std::runtime_error(what) {}
};

// Malformed graph/labeling text input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace srd
