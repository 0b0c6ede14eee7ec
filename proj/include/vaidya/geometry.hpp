#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vaidya/jet.hpp"
#include "vaidya/mass.hpp"

namespace vaidya {

/// Symmetric 4x4 of jets, upper-triangle storage.
class JetMatrix {
public:
    const Jet2& operator()(std::size_t i, std::size_t j) const noexcept { return data_[Sym4::slot(i, j)]; }
    Jet2& operator()(std::size_t i, std::size_t j) noexcept { return data_[Sym4::slot(i, j)]; }

    Eigen::Matrix4d values() const;
    /// d/dx^k of every entry.
    Eigen::Matrix4d partial(std::size_t k) const;
    Eigen::Matrix4d second_partial(std::size_t k, std::size_t l) const;

private:
    std::array<Jet2, Sym4::kSize> data_{};
};

/// Symmetric 4x4 metric whose entries are scalar fields on the chart.
class Metric4 {
public:
    explicit Metric4(std::array<ScalarField, Sym4::kSize> upper);

    const ScalarField& entry(std::size_t i, std::size_t j) const noexcept { return entries_[Sym4::slot(i, j)]; }
    JetMatrix evaluate(const Point4& p) const;

private:
    std::array<ScalarField, Sym4::kSize> entries_;
};

/// g_11 = (2m - r)/r, g_12 = -1, g_33 = r^2, g_44 = r^2 sin^2(theta).
Metric4 vaidya_metric(const MassFunction& m);

/// Constant metric, mainly for tests.
Metric4 constant_metric(const Eigen::Matrix4d& values);

/// Inverse by Gaussian elimination with partial pivoting. Throws DegenerateMetric
/// when |det| <= 1e-12.
Eigen::Matrix4d invert_values(const Eigen::Matrix4d& g);

/// Inverse metric with first and second partials propagated analytically:
/// d(g^-1) = -g^-1 (dg) g^-1 and its second-order counterpart.
JetMatrix inverse_metric(const Metric4& g, const Point4& p);
JetMatrix inverse_metric(const JetMatrix& g);

/// Closed-form Vaidya inverse, used as an independent oracle.
Eigen::Matrix4d vaidya_inverse_closed_form(const MassFunction& m, const Point4& p);

using Rank3 = std::array<std::array<std::array<double, 4>, 4>, 4>;
using Rank4 = std::array<Rank3, 4>;

/// Sign applied to R^a_{bcd} = d_c G^a_{db} - d_d G^a_{cb} + G^a_{ce} G^e_{db} - G^a_{de} G^e_{cb}
/// so that Ric_{bd} = R^a_{bad} gives Ric_uu = +2 m'/r^2 on Vaidya.
inline constexpr double kRiemannSign = -1.0;

struct CurvatureBundle {
    Eigen::Matrix4d metric;
    Eigen::Matrix4d inverse;
    Rank3 christoffel{};            ///< [a][b][c] = G^a_{bc}
    Rank4 christoffel_partial{};    ///< [a][b][c][e] = d_e G^a_{bc}
    Rank4 riemann{};                ///< lowered R_{abcd}
    Eigen::Matrix4d ricci;
    double scalar = 0.0;
};

CurvatureBundle curvature(const Metric4& g, const Point4& p);
CurvatureBundle curvature(const JetMatrix& g);

/// Ric_uu = 2 m'(u)/r^2, every other entry zero.
Sym4 closed_form_ricci(const MassFunction& m, const Point4& p);

/// Overall sign relating the tabulated components to the numeric lowered tensor.
/// With constant mass every tabulated component except R_1313 matches under it.
inline constexpr double kListedRiemannSign = -1.0;

struct RiemannListEntry {
    std::string label;               ///< e.g. "R_1313" (1-based indices)
    std::array<std::size_t, 4> index;  ///< 0-based
    double listed = 0.0;
    double numeric = 0.0;
    double difference = 0.0;         ///< |sign * numeric - listed| for the requested sign
    double difference_plus = 0.0;    ///< |numeric - listed|
    double difference_minus = 0.0;   ///< |-numeric - listed|
};

struct RiemannComparison {
    std::vector<RiemannListEntry> entries;
    double sign = kListedRiemannSign;       ///< sign used for difference
    double best_sign = kListedRiemannSign;  ///< sign with fewer mismatching components (ties keep the default)
    double max_difference = 0.0;
};

/// Compares the six tabulated Vaidya Riemann components with the numeric tensor
/// under both overall signs; difference and max_difference use the given sign.
RiemannComparison compare_riemann_oracle(const MassFunction& m, const Point4& p,
                                         double sign = kListedRiemannSign);

}  // namespace vaidya
