#pragma once

#include <stdexcept>
#include <string>

namespace xmscarf {

/// Base for every numerical error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A polynomial denominator vanished (within tolerance) at `location`.
class SingularPoint : public Error {
public:
    SingularPoint(const std::string& what, double location)
        : Error(what + " at x = " + std::to_string(location)), location_(location) {}

    double location() const noexcept { return location_; }

private:
    double location_;
};

/// A closed form hit a zero denominator or a Gamma pole for these parameters.
class DegenerateParameter : public Error {
public:
    using Error::Error;
};

/// Requested quantum number lies outside the bound-state range.
class NoSuchBoundState : public Error {
public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Input violates a precondition (bad degree, empty grid, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace xmscarf
