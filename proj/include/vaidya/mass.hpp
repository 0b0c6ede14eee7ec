#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vaidya/jet.hpp"

namespace vaidya {

struct MassValue {
    double m = 0.0;
    double dm = 0.0;
    double d2m = 0.0;
};

/// Mass profile m(u) of the Vaidya metric.
///
/// Textual form (shared with the CLI):
///   zero | const:<v> | linear:<a>,<b> | poly:<c0>,<c1>,... | sinoff:<amp>,<offset>
/// where linear means a*u + b and sinoff means amp*sin(u) + offset.
class MassFunction {
public:
    enum class Kind { zero, constant, linear, polynomial, sinusoidal_offset };

    static MassFunction zero();
    static MassFunction constant(double v);
    static MassFunction linear(double a, double b);
    static MassFunction polynomial(std::vector<double> coefficients);
    static MassFunction sinusoidal_offset(double amplitude, double offset);

    /// Throws InvalidInput on malformed text.
    static MassFunction parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }

    /// Canonical textual form; parse(spec()) reproduces the same function.
    std::string spec() const;

    MassValue at(double u) const noexcept;
    /// m(u) as a jet over the chart coordinates.
    Jet2 jet(const Point4& p) const noexcept;
    ScalarField field() const;

    /// True when m vanishes identically (kind zero, or all coefficients zero).
    bool is_identically_zero() const noexcept;

private:
    MassFunction(Kind kind, std::vector<double> coefficients);

    Kind kind_ = Kind::zero;
    std::vector<double> coefficients_;
};

std::string format_double(double x);

}  // namespace vaidya
