#pragma once

#include <stdexcept>
#include <string>

namespace hazelab {

// Precondition violated by a caller-supplied value (bad size, range, shape).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// File could not be read, parsed or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical procedure refused to run (e.g. an unstable integration step).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hazelab
