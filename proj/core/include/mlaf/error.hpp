#pragma once

#include <stdexcept>
#include <string>

namespace mlaf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid grid, model, forcing or run parameters.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Two fields (or a field and a buffer) live on different grids or shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A precondition on the mathematical input does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Requested time step exceeds the advective stability limit.
class CflError : public Error {
public:
    CflError(double requested, double admissible);
    double requested() const { return requested_; }
    double admissible() const { return admissible_; }

private:
    double requested_;
    double admissible_;
};

/// Non-finite values appeared in the simulated state.
class BlowupError : public Error {
public:
    using Error::Error;
};

/// Malformed or incompatible file on disk.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace mlaf
