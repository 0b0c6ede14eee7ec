#include "vaidya/lie.hpp"

#include <cmath>
#include <random>

namespace vaidya {

std::array<Jet2, 4> VectorField4::evaluate(const Point4& p) const
{
    return {vaidya::evaluate(A, p), vaidya::evaluate(B, p), vaidya::evaluate(C, p), vaidya::evaluate(D, p)};
}

VectorField4 VectorField4::combine(double a, const VectorField4& x, double b, const VectorField4& y)
{
    auto mix = [a, b](const ScalarField& f, const ScalarField& h) -> ScalarField {
        return [a, b, f, h](const Point4& p) { return a * f(p) + b * h(p); };
    };
    return {mix(x.A, y.A), mix(x.B, y.B), mix(x.C, y.C), mix(x.D, y.D)};
}

Sym4 lie_derivative(const JetMatrix& g, const std::array<Jet2, 4>& x)
{
    return Sym4::generate([&](std::size_t i, std::size_t j) {
        double v = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            v += x[k].value() * g(i, j).grad(k);
            v += g(k, j).value() * x[k].grad(i);
            v += g(i, k).value() * x[k].grad(j);
        }
        return v;
    });
}

Sym4 lie_derivative(const Metric4& g, const VectorField4& x, const Point4& p)
{
    require_in_domain(p);
    return lie_derivative(g.evaluate(p), x.evaluate(p));
}

std::array<double, 16> lie_vaidya_transcribed(const VectorField4& x, const MassFunction& mass, const Point4& p)
{
    require_in_domain(p);
    const auto [A, B, C, D] = x.evaluate(p);
    const double m = mass.at(p.u).m;
    const double r = p.r;
    const double s = std::sin(p.theta);
    const double c = std::cos(p.theta);
    const double g11 = (2.0 * m - r) / r;
    constexpr std::size_t u = 0, rr = 1, th = 2, ph = 3;

    std::array<double, 16> L{};
    L[0] = 2.0 * g11 * A.grad(u) - B.grad(u);
    L[1] = g11 * A.grad(rr) - B.grad(rr) - A.grad(u);
    L[2] = g11 * A.grad(th) - B.grad(th) + r * r * C.grad(u);
    L[3] = g11 * A.grad(ph) - B.grad(ph) + r * r * s * s * D.grad(u);
    L[4] = L[1];
    L[5] = -2.0 * A.grad(rr);
    L[6] = r * r * C.grad(rr) - A.grad(th);
    L[7] = r * r * s * s * D.grad(rr) - A.grad(ph);
    L[8] = L[2];
    L[9] = L[6];
    L[10] = 2.0 * (r * B.value() + r * r * C.grad(th));
    L[11] = r * r * C.grad(ph) + r * r * s * s * D.grad(th);
    L[12] = L[3];
    L[13] = L[7];
    L[14] = L[11];
    L[15] = 2.0 * r * B.value() * s * s + 2.0 * r * r * C.value() * s * c + 2.0 * r * D.grad(ph);
    return L;
}

double vaidya_advection_11(const VectorField4& x, const MassFunction& mass, const Point4& p)
{
    const MassValue mv = mass.at(p.u);
    const double r = p.r;
    return 2.0 * mv.dm * evaluate(x.A, p).value() / r - 2.0 * mv.m * evaluate(x.B, p).value() / (r * r);
}

VectorField4 random_polytrig_field(std::uint64_t seed)
{
    constexpr std::size_t kTerms = 13;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);

    auto make = [&]() -> ScalarField {
        std::array<double, kTerms> c;
        for (double& v : c) v = coef(rng);
        return [c](const Point4& p) {
            const Jet2 u = jet_coord(Coord::u, p);
            const Jet2 r = jet_coord(Coord::r, p);
            const Jet2 st = sin(jet_coord(Coord::theta, p));
            const Jet2 ct = cos(jet_coord(Coord::theta, p));
            const Jet2 sp = sin(jet_coord(Coord::phi, p));
            const Jet2 cp = cos(jet_coord(Coord::phi, p));
            return c[0] + c[1] * u + c[2] * r + c[3] * u * r + c[4] * u * u + c[5] * st + c[6] * ct + c[7] * sp
                   + c[8] * cp + c[9] * u * ct + c[10] * r * sp + c[11] * u * r * cp + c[12] * st * cp;
        };
    };
    VectorField4 x;
    x.A = make();
    x.B = make();
    x.C = make();
    x.D = make();
    return x;
}

}  // namespace vaidya
