#pragma once

#include <stdexcept>
#include <string>

namespace genrest {

/// Structural failure: a build-time invariant did not hold or an input was
/// unusable. Maps to CLI exit code 2.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric result that must be an integer deviated beyond tolerance.
/// Signals a bug in the calling computation, not noise.
class IntegralityError : public StructuralError {
public:
    explicit IntegralityError(const std::string& what) : StructuralError(what) {}
};

} // namespace genrest
