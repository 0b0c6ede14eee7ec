#include "vaidya/jet.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "vaidya/errors.hpp"

namespace vaidya {

bool in_domain(const Point4& p, const DomainLimits& limits) noexcept
{
    for (double x : p.as_array())
        if (!std::isfinite(x)) return false;
    return p.r >= limits.r_min && p.theta >= limits.theta_min && p.theta <= std::numbers::pi - limits.theta_min;
}

void require_in_domain(const Point4& p, const DomainLimits& limits)
{
    if (!in_domain(p, limits)) throw InvalidInput("point outside the chart domain: " + to_string(p));
}

std::string to_string(const Point4& p)
{
    std::ostringstream os;
    os.precision(17);
    os << "(u=" << p.u << ", r=" << p.r << ", theta=" << p.theta << ", phi=" << p.phi << ")";
    return os.str();
}

SingularEvaluation::SingularEvaluation(const std::string& what, std::optional<Point4> where)
    : Error(where ? what + " at " + to_string(*where) : what), reason_(what), point_(where)
{
}

SingularEvaluation SingularEvaluation::at(const Point4& p) const
{
    return SingularEvaluation(reason_, p);
}

bool Jet2::is_finite() const noexcept
{
    if (!std::isfinite(value_)) return false;
    for (double g : grad_)
        if (!std::isfinite(g)) return false;
    for (double h : hess_.upper())
        if (!std::isfinite(h)) return false;
    return true;
}

Jet2& Jet2::operator+=(const Jet2& o) noexcept
{
    value_ += o.value_;
    for (std::size_t i = 0; i < 4; ++i) grad_[i] += o.grad_[i];
    hess_ += o.hess_;
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) noexcept
{
    value_ -= o.value_;
    for (std::size_t i = 0; i < 4; ++i) grad_[i] -= o.grad_[i];
    hess_ -= o.hess_;
    return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) noexcept
{
    Sym4 h;
    for (auto [i, j] : kUpperPairs)
        h(i, j) = value_ * o.hess_(i, j) + o.value_ * hess_(i, j) + grad_[i] * o.grad_[j] + o.grad_[i] * grad_[j];
    for (std::size_t i = 0; i < 4; ++i) grad_[i] = value_ * o.grad_[i] + o.value_ * grad_[i];
    value_ *= o.value_;
    hess_ = h;
    return *this;
}

Jet2& Jet2::operator/=(const Jet2& o)
{
    return *this *= (1.0 / o);
}

Jet2& Jet2::operator*=(double c) noexcept
{
    value_ *= c;
    for (double& g : grad_) g *= c;
    hess_ *= c;
    return *this;
}

Jet2 jet_const(double c)
{
    if (!std::isfinite(c)) throw InvalidInput("jet_const: non-finite constant");
    return Jet2(c, {}, {});
}

Jet2 jet_coord(Coord c, const Point4& p)
{
    Vec4 g{};
    g[index(c)] = 1.0;
    return Jet2(p[c], g, {});
}

Jet2 jet_coord(int i, const Point4& p)
{
    if (i < 0 || i > 3) throw InvalidInput("jet_coord: coordinate index must be in 0..3");
    return jet_coord(static_cast<Coord>(i), p);
}

Jet2 chain(const Jet2& a, double f0, double f1, double f2) noexcept
{
    Vec4 g;
    for (std::size_t i = 0; i < 4; ++i) g[i] = f1 * a.grad(i);
    Sym4 h;
    for (auto [i, j] : kUpperPairs) h(i, j) = f2 * a.grad(i) * a.grad(j) + f1 * a.hess(i, j);
    return Jet2(f0, g, h);
}

Jet2 operator-(const Jet2& a) noexcept { return a * -1.0; }
Jet2 operator+(Jet2 a, const Jet2& b) noexcept { return a += b; }
Jet2 operator-(Jet2 a, const Jet2& b) noexcept { return a -= b; }
Jet2 operator*(Jet2 a, const Jet2& b) noexcept { return a *= b; }
Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
Jet2 operator+(Jet2 a, double c) noexcept { return a += c; }
Jet2 operator+(double c, Jet2 a) noexcept { return a += c; }
Jet2 operator-(Jet2 a, double c) noexcept { return a += -c; }
Jet2 operator-(double c, const Jet2& a) noexcept { return -a + c; }
Jet2 operator*(Jet2 a, double c) noexcept { return a *= c; }
Jet2 operator*(double c, Jet2 a) noexcept { return a *= c; }

Jet2 operator/(const Jet2& a, double c)
{
    if (c == 0.0) throw SingularEvaluation("division by zero");
    return a * (1.0 / c);
}

Jet2 operator/(double c, const Jet2& a)
{
    const double x = a.value();
    if (x == 0.0) throw SingularEvaluation("division by zero");
    return chain(a, c / x, -c / (x * x), 2.0 * c / (x * x * x));
}

Jet2 sin(const Jet2& a) noexcept
{
    const double s = std::sin(a.value());
    return chain(a, s, std::cos(a.value()), -s);
}

Jet2 cos(const Jet2& a) noexcept
{
    const double c = std::cos(a.value());
    return chain(a, c, -std::sin(a.value()), -c);
}

Jet2 tan(const Jet2& a)
{
    if (std::abs(std::cos(a.value())) < 1e-12) throw SingularEvaluation("tan: cos vanishes");
    return sin(a) / cos(a);
}

Jet2 exp(const Jet2& a) noexcept
{
    const double e = std::exp(a.value());
    return chain(a, e, e, e);
}

Jet2 sqrt(const Jet2& a)
{
    const double x = a.value();
    if (!(x > 0.0)) throw SingularEvaluation("sqrt: argument must be positive");
    const double s = std::sqrt(x);
    return chain(a, s, 0.5 / s, -0.25 / (s * x));
}

Jet2 log(const Jet2& a)
{
    const double x = a.value();
    if (!(x > 0.0)) throw SingularEvaluation("ln: argument must be positive");
    return chain(a, std::log(x), 1.0 / x, -1.0 / (x * x));
}

Jet2 pow_int(const Jet2& a, int k)
{
    const double x = a.value();
    if (k == 0) return Jet2(1.0, {}, {});
    if (k < 0 && x == 0.0) throw SingularEvaluation("pow_int: zero base with negative exponent");
    const double f0 = std::pow(x, k);
    const double f1 = k * std::pow(x, k - 1);
    const double f2 = k == 1 ? 0.0 : k * (k - 1) * std::pow(x, k - 2);
    return chain(a, f0, f1, f2);
}

Jet2 jet_binary(BinaryOp op, const Jet2& a, const Jet2& b)
{
    switch (op) {
    case BinaryOp::add: return a + b;
    case BinaryOp::sub: return a - b;
    case BinaryOp::mul: return a * b;
    case BinaryOp::div: return a / b;
    }
    throw InvalidInput("jet_binary: unknown operation");
}

Jet2 jet_unary(UnaryOp op, const Jet2& a, std::optional<int> k)
{
    switch (op) {
    case UnaryOp::neg: return -a;
    case UnaryOp::sin: return sin(a);
    case UnaryOp::cos: return cos(a);
    case UnaryOp::tan: return tan(a);
    case UnaryOp::exp: return exp(a);
    case UnaryOp::sqrt: return sqrt(a);
    case UnaryOp::ln: return log(a);
    case UnaryOp::pow_int:
        if (!k) throw InvalidInput("jet_unary: pow_int requires an exponent");
        return pow_int(a, *k);
    }
    throw InvalidInput("jet_unary: unknown operation");
}

ScalarField const_field(double c)
{
    Jet2 j = jet_const(c);
    return [j](const Point4&) { return j; };
}

ScalarField coord_field(Coord c)
{
    return [c](const Point4& p) { return jet_coord(c, p); };
}

Jet2 evaluate(const ScalarField& f, const Point4& p)
{
    try {
        return f(p);
    } catch (const SingularEvaluation& e) {
        if (e.point()) throw;
        throw e.at(p);
    }
}

}  // namespace vaidya
