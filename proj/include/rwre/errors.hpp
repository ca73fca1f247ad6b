#pragma once

#include <stdexcept>
#include <string>

namespace rwre {

/// Invalid user-supplied configuration: model spec, distribution support,
/// out-of-range parameters, malformed documents.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation needed environment sites outside the materialized window.
/// The message names the span the operation required and the span available.
class WindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A denominator (or continued-fraction tail) fell below the safe floor.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative limit exhausted its window (or depth cap) before reaching
/// the requested tolerance. Carries the last observed increment.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double last_increment)
        : std::runtime_error(msg), last_increment_(last_increment) {}

    double last_increment() const noexcept { return last_increment_; }

private:
    double last_increment_;
};

} // namespace rwre
