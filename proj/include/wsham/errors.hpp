#pragma once

#include <stdexcept>
#include <string>

namespace wsham {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape/grade/dimension mismatches between algebraic objects.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A polyvector is not a graph over the worldsheet (vanishing volume
/// coordinate), so the jet chart does not apply.
class ChartError : public Error {
public:
    using Error::Error;
};

/// Input violates a variety constraint (non-decomposable polyvector,
/// point off the graph variety, ...).
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// A quadric that should be invertible is numerically rank-deficient.
/// Carries the detected rank so callers can report the defect.
class DegeneracyError : public Error {
public:
    DegeneracyError(const std::string& what, int rank, int size)
        : Error(what), rank(rank), size(size) {}
    int rank;
    int size;
};

/// Operation asked of a model family that does not support it.
class UnsupportedModelError : public Error {
public:
    using Error::Error;
};

/// Bad run configuration (CFL violation, nonpositive sizes, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace wsham
