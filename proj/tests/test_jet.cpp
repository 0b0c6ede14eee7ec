#include <gtest/gtest.h>

#include <limits>

#include "support.hpp"
#include "vaidya/errors.hpp"
#include "vaidya/jet.hpp"
#include "vaidya/mass.hpp"

using namespace vaidya;
using vaidya::oracle::kPi;

namespace {

void expect_zero_derivatives(const Jet2& j)
{
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(j.grad(i), 0.0);
        for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(j.hess(i, k), 0.0);
    }
}

/// Checks every first and second partial of f's jet against finite differences
/// of the value-only composition.
void expect_matches_fd(const ScalarField& f, const Point4& p)
{
    const Jet2 j = f(p);
    auto value = [&](const Point4& q) { return f(q).value(); };
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_LT(oracle::rel_err(j.grad(k), oracle::fd_first(value, p, k)), 1e-6) << "d" << k << " at "
                                                                                     << to_string(p);
        // Second partials: central differences of the exact first partials.
        auto gk = [&](const Point4& q) { return f(q).grad(k); };
        for (std::size_t l = 0; l < 4; ++l)
            EXPECT_LT(oracle::rel_err(j.hess(k, l), oracle::fd_first(gk, p, l)), 1e-6)
                << "d" << k << "d" << l << " at " << to_string(p);
    }
}

}  // namespace

TEST(JetConst, ZeroAndOne)
{
    const Jet2 z = jet_const(0.0);
    EXPECT_EQ(z.value(), 0.0);
    expect_zero_derivatives(z);
    const Jet2 one = jet_const(1.0);
    EXPECT_EQ(one.value(), 1.0);
    expect_zero_derivatives(one);
}

TEST(JetConst, KappaFromBetaAndPressure)
{
    const double kappa = 2.0 * 1.0 - (0.5 + 2.0 / 4.0);
    const Jet2 k = jet_const(kappa);
    EXPECT_EQ(k.value(), 1.0);
    expect_zero_derivatives(k);
}

TEST(JetConst, RejectsNonFinite)
{
    EXPECT_THROW(jet_const(std::numeric_limits<double>::quiet_NaN()), InvalidInput);
    EXPECT_THROW(jet_const(std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST(JetCoord, UnitGradients)
{
    const Point4 p{1.0, 2.0, kPi / 2.0, 0.0};
    const Jet2 u = jet_coord(Coord::u, p);
    const Jet2 r = jet_coord(Coord::r, p);
    const Jet2 th = jet_coord(Coord::theta, p);
    EXPECT_EQ(u.value(), 1.0);
    EXPECT_EQ(r.value(), 2.0);
    EXPECT_EQ(th.value(), kPi / 2.0);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(u.grad(k), k == 0 ? 1.0 : 0.0);
        EXPECT_EQ(r.grad(k), k == 1 ? 1.0 : 0.0);
        EXPECT_EQ(th.grad(k), k == 2 ? 1.0 : 0.0);
    }
    expect_zero_derivatives(jet_coord(Coord::phi, p) - jet_coord(3, p));
}

TEST(JetCoord, RejectsBadIndex)
{
    EXPECT_THROW(jet_coord(4, Point4{}), InvalidInput);
    EXPECT_THROW(jet_coord(-1, Point4{}), InvalidInput);
}

TEST(JetBinary, ProductRule)
{
    const Point4 p{1.0, 2.0, 1.0, 0.5};
    const Jet2 prod = jet_binary(BinaryOp::mul, jet_coord(Coord::u, p), jet_coord(Coord::r, p));
    EXPECT_EQ(prod.value(), 2.0);
    EXPECT_EQ(prod.grad(0), 2.0);
    EXPECT_EQ(prod.grad(1), 1.0);
    EXPECT_EQ(prod.hess(0, 1), 1.0);
    EXPECT_EQ(prod.hess(1, 0), 1.0);
    EXPECT_EQ(prod.hess(0, 0), 0.0);
}

TEST(JetBinary, AddNegationIsZero)
{
    const Point4 p{0.3, 1.7, 0.9, 2.0};
    const Jet2 x = sin(jet_coord(Coord::theta, p)) * jet_coord(Coord::r, p);
    const Jet2 z = jet_binary(BinaryOp::add, x, jet_unary(UnaryOp::neg, x));
    EXPECT_EQ(z.value(), 0.0);
    expect_zero_derivatives(z);
}

TEST(JetBinary, QuotientOfMassOverRadius)
{
    // 2u/r at (u=1, r=2): value 1, d_u = 2/r = 1, d_r = -2u/r^2 = -1/2.
    const Point4 p{1.0, 2.0, kPi / 2.0, 0.0};
    const Jet2 two_m = 2.0 * MassFunction::linear(1.0, 0.0).jet(p);
    const Jet2 q = jet_binary(BinaryOp::div, two_m, jet_coord(Coord::r, p));
    EXPECT_DOUBLE_EQ(q.value(), 1.0);
    EXPECT_DOUBLE_EQ(q.grad(0), 1.0);
    EXPECT_DOUBLE_EQ(q.grad(1), -0.5);
    EXPECT_DOUBLE_EQ(q.hess(0, 1), -0.5);  // -2/r^2
    EXPECT_DOUBLE_EQ(q.hess(1, 1), 0.5);   // 4u/r^3
}

TEST(JetBinary, DivisionByZeroCarriesPoint)
{
    const Point4 p{0.0, 2.0, 1.0, 0.0};
    EXPECT_THROW(jet_binary(BinaryOp::div, jet_const(1.0), jet_coord(Coord::u, p)), SingularEvaluation);
    const ScalarField f = [](const Point4& q) { return 1.0 / jet_coord(Coord::u, q); };
    try {
        evaluate(f, p);
        FAIL() << "expected SingularEvaluation";
    } catch (const SingularEvaluation& e) {
        ASSERT_TRUE(e.point().has_value());
        EXPECT_EQ(*e.point(), p);
    }
}

TEST(JetUnary, SinAtHalfPi)
{
    const Jet2 s = jet_unary(UnaryOp::sin, jet_coord(Coord::theta, Point4{0, 1, kPi / 2.0, 0}));
    EXPECT_DOUBLE_EQ(s.value(), 1.0);
    EXPECT_NEAR(s.grad(2), 0.0, 1e-16);
    EXPECT_DOUBLE_EQ(s.hess(2, 2), -1.0);
}

TEST(JetUnary, TanAtQuarterPi)
{
    const Jet2 t = jet_unary(UnaryOp::tan, jet_coord(Coord::theta, Point4{0, 1, kPi / 4.0, 0}));
    EXPECT_NEAR(t.value(), 1.0, 1e-15);
    EXPECT_NEAR(t.grad(2), 2.0, 1e-15);
    EXPECT_NEAR(t.hess(2, 2), 4.0, 1e-14);  // 2 sec^2 tan
}

TEST(JetUnary, ExpOfAzimuth)
{
    const double gamma = 1.0;
    const Jet2 e = jet_unary(UnaryOp::exp, std::sqrt(gamma) * jet_coord(Coord::phi, Point4{0, 1, 1, 0}));
    EXPECT_EQ(e.value(), 1.0);
    EXPECT_EQ(e.grad(3), 1.0);
    EXPECT_EQ(e.hess(3, 3), 1.0);
}

TEST(JetUnary, DomainErrors)
{
    const Point4 p{-1.0, 1.0, kPi / 2.0, 0.0};
    EXPECT_THROW(jet_unary(UnaryOp::sqrt, jet_coord(Coord::u, p)), SingularEvaluation);
    EXPECT_THROW(jet_unary(UnaryOp::ln, jet_coord(Coord::u, p)), SingularEvaluation);
    EXPECT_THROW(jet_unary(UnaryOp::ln, jet_const(0.0)), SingularEvaluation);
    EXPECT_THROW(jet_unary(UnaryOp::tan, jet_coord(Coord::theta, p)), SingularEvaluation);
    EXPECT_THROW(jet_unary(UnaryOp::pow_int, jet_const(0.0), -1), SingularEvaluation);
    EXPECT_THROW(jet_unary(UnaryOp::pow_int, jet_const(2.0)), InvalidInput);
}

TEST(JetUnary, PowIntSpecialExponents)
{
    const Point4 p{1.5, 2.0, 1.0, 0.0};
    const Jet2 r = jet_coord(Coord::r, p);
    const Jet2 zero = pow_int(r, 0);
    EXPECT_EQ(zero.value(), 1.0);
    expect_zero_derivatives(zero);
    const Jet2 inv2 = pow_int(r, -2);
    EXPECT_DOUBLE_EQ(inv2.value(), 0.25);
    EXPECT_DOUBLE_EQ(inv2.grad(1), -0.25);
    EXPECT_DOUBLE_EQ(inv2.hess(1, 1), 6.0 / 16.0);
}

// Leibniz and quotient rules against finite differences of the composed scalar.
TEST(JetProperty, BinaryOpsMatchFiniteDifferences)
{
    oracle::PointSampler sample(7);
    const ScalarField a = [](const Point4& p) {
        return jet_coord(Coord::u, p) * jet_coord(Coord::r, p) + sin(jet_coord(Coord::theta, p));
    };
    const ScalarField b = [](const Point4& p) {
        return 2.0 + cos(jet_coord(Coord::phi, p)) * jet_coord(Coord::r, p) / 4.0 + 0.1 * jet_coord(Coord::u, p);
    };
    for (int n = 0; n < 100; ++n) {
        const Point4 p = sample();
        for (BinaryOp op : {BinaryOp::add, BinaryOp::sub, BinaryOp::mul, BinaryOp::div})
            expect_matches_fd([&](const Point4& q) { return jet_binary(op, a(q), b(q)); }, p);
    }
}

TEST(JetProperty, UnaryOpsMatchFiniteDifferences)
{
    oracle::PointSampler sample(11);
    // Positive, bounded argument mixing all four coordinates.
    const ScalarField arg = [](const Point4& p) {
        return 1.2 + 0.3 * sin(jet_coord(Coord::u, p)) * jet_coord(Coord::r, p) / 4.0
               + 0.2 * cos(jet_coord(Coord::theta, p) + jet_coord(Coord::phi, p));
    };
    for (int n = 0; n < 100; ++n) {
        const Point4 p = sample();
        for (UnaryOp op : {UnaryOp::neg, UnaryOp::sin, UnaryOp::cos, UnaryOp::tan, UnaryOp::exp, UnaryOp::sqrt,
                           UnaryOp::ln})
            // tan stays on the half-argument, away from its pole.
            expect_matches_fd([&](const Point4& q) { return jet_unary(op, op == UnaryOp::tan ? 0.5 * arg(q) : arg(q)); },
                              p);
        for (int k : {-3, -1, 2, 5})
            expect_matches_fd([&](const Point4& q) { return jet_unary(UnaryOp::pow_int, arg(q), k); }, p);
    }
}

TEST(JetProperty, HessianSymmetricAfterComposition)
{
    oracle::PointSampler sample(3);
    for (int n = 0; n < 50; ++n) {
        const Point4 p = sample();
        const Jet2 u = jet_coord(Coord::u, p), r = jet_coord(Coord::r, p);
        const Jet2 th = jet_coord(Coord::theta, p), ph = jet_coord(Coord::phi, p);
        const Jet2 j = exp(sin(u * th) / r) * sqrt(r + cos(ph) * cos(ph)) - log(r) * tan(th / 4.0);
        EXPECT_TRUE(j.is_finite());
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(j.hess(i, k), j.hess(k, i));
    }
}

TEST(Point, DomainGuards)
{
    EXPECT_TRUE(in_domain(Point4{0.0, 1.0, 1.0, 0.0}));
    EXPECT_FALSE(in_domain(Point4{0.0, 1e-4, 1.0, 0.0}));
    EXPECT_FALSE(in_domain(Point4{0.0, 1.0, 1e-4, 0.0}));
    EXPECT_FALSE(in_domain(Point4{0.0, 1.0, kPi - 1e-4, 0.0}));
    EXPECT_TRUE(in_domain(Point4{0.0, 1e-3, 1e-3, 0.0}));
    EXPECT_THROW(require_in_domain(Point4{0.0, -1.0, 1.0, 0.0}), InvalidInput);
    EXPECT_THROW(require_in_domain(Point4{std::numeric_limits<double>::quiet_NaN(), 1.0, 1.0, 0.0}), InvalidInput);
}

TEST(MassFunction, ZeroIsExactlyZero)
{
    const MassValue v = MassFunction::zero().at(3.7);
    EXPECT_EQ(v.m, 0.0);
    EXPECT_EQ(v.dm, 0.0);
    EXPECT_EQ(v.d2m, 0.0);
    EXPECT_TRUE(MassFunction::zero().is_identically_zero());
    EXPECT_TRUE(MassFunction::parse("poly:0,0").is_identically_zero());
    EXPECT_FALSE(MassFunction::parse("const:1").is_identically_zero());
}

TEST(MassFunction, ParseKinds)
{
    EXPECT_EQ(MassFunction::parse("zero").kind(), MassFunction::Kind::zero);
    EXPECT_EQ(MassFunction::parse("const:2.5").at(9.0).m, 2.5);
    const MassValue lin = MassFunction::parse("linear:3,-1").at(2.0);
    EXPECT_EQ(lin.m, 5.0);
    EXPECT_EQ(lin.dm, 3.0);
    EXPECT_EQ(lin.d2m, 0.0);
    const MassValue poly = MassFunction::parse("poly:1,2,3").at(2.0);  // 1 + 2u + 3u^2
    EXPECT_EQ(poly.m, 17.0);
    EXPECT_EQ(poly.dm, 14.0);
    EXPECT_EQ(poly.d2m, 6.0);
    const MassValue so = MassFunction::parse("sinoff:1,2").at(kPi / 2.0);
    EXPECT_DOUBLE_EQ(so.m, 3.0);
    EXPECT_NEAR(so.dm, 0.0, 1e-16);
    EXPECT_DOUBLE_EQ(so.d2m, -1.0);
}

TEST(MassFunction, ParseRejectsMalformed)
{
    for (const char* bad : {"", "zero:1", "const", "const:", "const:x", "const:1,2", "linear:1", "linear:1,2,3",
                            "poly:", "poly:1,,2", "sinoff:1", "wave:1", "const:nan", "const:1e999", " const:1"})
        EXPECT_THROW(MassFunction::parse(bad), InvalidInput) << "'" << bad << "'";
}

TEST(MassFunction, DerivativesMatchFiniteDifferences)
{
    oracle::PointSampler sample(5);
    for (const char* spec : {"const:1.5", "linear:1,0", "poly:0.5,-1,0.25,0.1", "sinoff:1,2"}) {
        const MassFunction m = MassFunction::parse(spec);
        for (int n = 0; n < 20; ++n) {
            const double u = sample.uniform(-3.0, 3.0);
            constexpr double h = 1e-5;
            const double fd1 = (m.at(u + h).m - m.at(u - h).m) / (2.0 * h);
            const double fd2 = (m.at(u + h).dm - m.at(u - h).dm) / (2.0 * h);
            EXPECT_LT(oracle::rel_err(m.at(u).dm, fd1), 1e-6) << spec;
            EXPECT_LT(oracle::rel_err(m.at(u).d2m, fd2), 1e-6) << spec;
        }
    }
}

TEST(MassFunction, SpecRoundTrip)
{
    oracle::PointSampler sample(19);
    for (const char* spec : {"zero", "const:0.1", "linear:1,0", "poly:1e-7,3.25,-2", "sinoff:0.3333333333333333,2"}) {
        const MassFunction m = MassFunction::parse(spec);
        const MassFunction again = MassFunction::parse(m.spec());
        EXPECT_EQ(again.spec(), m.spec());
        for (int n = 0; n < 5; ++n) {
            const double u = sample.uniform(-2.0, 2.0);
            EXPECT_EQ(again.at(u).m, m.at(u).m);
        }
    }
}
