#pragma once

#include <array>
#include <functional>
#include <optional>

#include "vaidya/point.hpp"
#include "vaidya/sym4.hpp"

namespace vaidya {

using Vec4 = std::array<double, 4>;

/// Second-order jet over the four chart coordinates: a value with its gradient
/// and (exactly symmetric) Hessian.
class Jet2 {
public:
    constexpr Jet2() = default;
    Jet2(double value, const Vec4& grad, const Sym4& hess) : value_(value), grad_(grad), hess_(hess) {}

    double value() const noexcept { return value_; }
    const Vec4& grad() const noexcept { return grad_; }
    double grad(std::size_t i) const noexcept { return grad_[i]; }
    const Sym4& hess() const noexcept { return hess_; }
    double hess(std::size_t i, std::size_t j) const noexcept { return hess_(i, j); }

    bool is_finite() const noexcept;

    Jet2& operator+=(const Jet2& o) noexcept;
    Jet2& operator-=(const Jet2& o) noexcept;
    Jet2& operator*=(const Jet2& o) noexcept;
    Jet2& operator/=(const Jet2& o);
    Jet2& operator+=(double c) noexcept
    {
        value_ += c;
        return *this;
    }
    Jet2& operator*=(double c) noexcept;

private:
    double value_ = 0.0;
    Vec4 grad_{};
    Sym4 hess_{};
};

/// Throws InvalidInput for non-finite c.
Jet2 jet_const(double c);
Jet2 jet_coord(Coord c, const Point4& p);
/// Index-based variant for bindings and parsers; throws InvalidInput unless index < 4.
Jet2 jet_coord(int index, const Point4& p);

/// Applies a scalar function through the chain rule given f(a), f'(a), f''(a).
Jet2 chain(const Jet2& a, double f0, double f1, double f2) noexcept;

Jet2 operator-(const Jet2& a) noexcept;
Jet2 operator+(Jet2 a, const Jet2& b) noexcept;
Jet2 operator-(Jet2 a, const Jet2& b) noexcept;
Jet2 operator*(Jet2 a, const Jet2& b) noexcept;
Jet2 operator/(Jet2 a, const Jet2& b);
Jet2 operator+(Jet2 a, double c) noexcept;
Jet2 operator+(double c, Jet2 a) noexcept;
Jet2 operator-(Jet2 a, double c) noexcept;
Jet2 operator-(double c, const Jet2& a) noexcept;
Jet2 operator*(Jet2 a, double c) noexcept;
Jet2 operator*(double c, Jet2 a) noexcept;
Jet2 operator/(const Jet2& a, double c);
Jet2 operator/(double c, const Jet2& a);

Jet2 sin(const Jet2& a) noexcept;
Jet2 cos(const Jet2& a) noexcept;
/// sin/cos; singular when |cos| < 1e-12.
Jet2 tan(const Jet2& a);
Jet2 exp(const Jet2& a) noexcept;
Jet2 sqrt(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 pow_int(const Jet2& a, int k);

enum class BinaryOp { add, sub, mul, div };
enum class UnaryOp { neg, sin, cos, tan, exp, sqrt, pow_int, ln };

Jet2 jet_binary(BinaryOp op, const Jet2& a, const Jet2& b);
/// k is required for pow_int and ignored otherwise.
Jet2 jet_unary(UnaryOp op, const Jet2& a, std::optional<int> k = std::nullopt);

/// Pure map from chart points to jets.
using ScalarField = std::function<Jet2(const Point4&)>;

ScalarField const_field(double c);
ScalarField coord_field(Coord c);

/// Evaluates f at p, attaching p to any SingularEvaluation raised inside.
Jet2 evaluate(const ScalarField& f, const Point4& p);

}  // namespace vaidya
