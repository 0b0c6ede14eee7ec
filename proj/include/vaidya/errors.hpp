#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "vaidya/point.hpp"

namespace vaidya {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Raised when a jet operation leaves its domain (division by zero, sqrt of a
/// negative, tan at a pole). The point is attached once the failure bubbles up
/// to a field evaluation.
class SingularEvaluation : public Error {
public:
    explicit SingularEvaluation(const std::string& what, std::optional<Point4> where = std::nullopt);

    const std::optional<Point4>& point() const noexcept { return point_; }
    SingularEvaluation at(const Point4& p) const;

private:
    std::string reason_;
    std::optional<Point4> point_;
};

class DegenerateMetric : public Error {
public:
    using Error::Error;
};

/// A necessary condition for the scalar potential (psi3 = 0) is violated.
class ExistenceViolation : public Error {
public:
    using Error::Error;
};

class UnderdeterminedSystem : public Error {
public:
    using Error::Error;
};

}  // namespace vaidya
