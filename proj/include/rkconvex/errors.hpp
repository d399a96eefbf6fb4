#pragma once

#include <stdexcept>
#include <string>

namespace rkconvex {

/// Input outside an operation's mathematical domain (collision point,
/// energy above the critical value, zero gradient, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Stereographic unprojection requested at the north pole.
struct CollisionError : DomainError {
    explicit CollisionError(const std::string& what) : DomainError(what) {}
};

/// Divisor does not have the degree required by the reduction.
struct DegreeError : std::invalid_argument {
    explicit DegreeError(const std::string& what) : std::invalid_argument(what) {}
};

/// The quaternion frame is requested at a point with vanishing gradient.
struct DegenerateFrameError : std::runtime_error {
    explicit DegenerateFrameError(const std::string& what) : std::runtime_error(what) {}
};

/// A root bracket could not be established along a sampling ray.
struct RootBracketError : std::runtime_error {
    explicit RootBracketError(const std::string& what) : std::runtime_error(what) {}
};

/// A cached symbolic construction failed an internal exactness requirement.
struct ConstructionError : std::logic_error {
    explicit ConstructionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rkconvex
