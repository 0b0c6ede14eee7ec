#pragma once

#include <array>
#include <cstdint>

#include "vaidya/geometry.hpp"

namespace vaidya {

/// Vector field X = A d_u + B d_r + C d_theta + D d_phi.
struct VectorField4 {
    ScalarField A = const_field(0.0);
    ScalarField B = const_field(0.0);
    ScalarField C = const_field(0.0);
    ScalarField D = const_field(0.0);

    const ScalarField& component(std::size_t k) const noexcept
    {
        switch (k) {
        case 0: return A;
        case 1: return B;
        case 2: return C;
        default: return D;
        }
    }

    std::array<Jet2, 4> evaluate(const Point4& p) const;

    /// a*X + b*Y, componentwise.
    static VectorField4 combine(double a, const VectorField4& x, double b, const VectorField4& y);
};

/// (L_X g)_ij = X^k d_k g_ij + g_kj d_i X^k + g_ik d_j X^k.
Sym4 lie_derivative(const Metric4& g, const VectorField4& x, const Point4& p);
Sym4 lie_derivative(const JetMatrix& g, const std::array<Jet2, 4>& x);

/// The sixteen Vaidya Lie-derivative components as tabulated, row-major
/// (1,1),(1,2),...,(4,4), including the mirrored entries.
///
/// Kept verbatim: entry (1,1) omits the advection term X^k d_k g_11 and carries
/// -d_u B where the general formula gives -2 d_u B; entry (4,4) carries 2r d_phi D
/// where the general formula gives 2 r^2 sin^2(theta) d_phi D.
std::array<double, 16> lie_vaidya_transcribed(const VectorField4& x, const MassFunction& m, const Point4& p);

/// X^k d_k g_11 = 2 m' A / r - 2 m B / r^2 for the Vaidya metric.
double vaidya_advection_11(const VectorField4& x, const MassFunction& m, const Point4& p);

/// Random field whose components are combinations of 1, u, r, ur, u^2 and
/// low-order trig terms in theta and phi, coefficients uniform in [-1, 1].
/// Deterministic for a given seed.
VectorField4 random_polytrig_field(std::uint64_t seed);

}  // namespace vaidya
