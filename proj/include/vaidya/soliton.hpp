#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vaidya/lie.hpp"

namespace vaidya {

/// Parameters of L_X g + 2S = kappa g + 2 alpha R g with kappa = 2 beta - (p + 2/n), n = 4.
struct SolitonParams {
    static constexpr int n = 4;

    std::optional<double> beta;
    std::optional<double> p;
    double alpha = 0.0;
    double kappa = 0.0;

    static SolitonParams from_beta_p(double beta, double p, double alpha = 0.0);
    static SolitonParams from_kappa(double kappa, double alpha = 0.0);
};

/// Residual L_X g + 2S - kappa g - 2 alpha R g at p, using the numeric curvature.
Sym4 soliton_residual(const Metric4& g, const VectorField4& x, const SolitonParams& params, const Point4& p);
Sym4 soliton_residual(const JetMatrix& g, const CurvatureBundle& curv, const std::array<Jet2, 4>& x,
                      const SolitonParams& params);

/// LHS - RHS of the ten component equations of the Vaidya soliton system, in
/// order. Transcribed as tabulated.
std::array<double, 10> pde_system_residuals(const VectorField4& x, const MassFunction& m, double kappa,
                                            const Point4& p);

/// Residual component (0-based) that each PDE-system equation is proportional to.
inline constexpr std::array<std::array<std::size_t, 2>, 10> kEquationComponent{{
    {0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

/// Exact relation equation_k = factor * residual component at p, from expanding
/// the soliton residual by hand: 1/2, -1/2, 1/2, 1/(2r), then 1 for the six
/// off-diagonal equations. Only the fourth equation carries a point-dependent factor.
double equation_residual_factor(std::size_t equation_index, const Point4& p);

struct CorrespondenceEntry {
    int equation = 0;                    ///< 1-based equation number within the system
    std::array<std::size_t, 2> component{};  ///< 0-based residual component
    double factor = 0.0;                 ///< least-squares c with eq = c * residual
    double fit_residual = 0.0;           ///< max |eq - c * residual| over the grid
    bool constant = false;               ///< fit_residual within tolerance
};

/// Fits, per equation, the constant relating it to the matching soliton
/// residual component. Non-constant ratios are reported (constant = false).
std::vector<CorrespondenceEntry> correspondence_factors(const VectorField4& x, const MassFunction& m,
                                                        const SolitonParams& params, std::span<const Point4> grid,
                                                        double tolerance = 1e-9);

struct SolvedSolution {
    double kappa = 0.0;
    double Psi = 0.0;
    double psi3 = 0.0;
};

/// A = kappa u / 2 + Psi, B = kappa r / 2, C = 0, D = psi3.
VectorField4 solved_vector_field(const SolvedSolution& s);

struct SeparationFamily {
    double Gamma = 0.0;  ///< >= 0
    double psi1 = 0.0;
    double psi2 = 0.0;
};

struct SeparationFields {
    ScalarField C;
    ScalarField D;
};

/// D = (psi1 e^{sqrt(G) phi} + psi2 e^{-sqrt(G) phi}) tan^G theta,
/// C = -sqrt(G) (psi1 e^{sqrt(G) phi} - psi2 e^{-sqrt(G) phi}) tan^{G+1} theta.
/// For G > 0 evaluation needs theta in (theta_min, pi/2 - theta_min).
SeparationFields separation_family_fields(const SeparationFamily& fam, const DomainLimits& limits = {});

/// d_phi^2 D - sin(theta) cos(theta) d_theta D.
double separation_pde_residual(const SeparationFamily& fam, const Point4& p);

/// Residual of the r^2 d_theta C equation with B = kappa r / 2 and C from the family.
double gamma_forcing_residual(const SeparationFamily& fam, double kappa, const Point4& p);

/// Components of grad f = g^{kj} d_k f d_j.
Vec4 metric_gradient(const Metric4& g, const ScalarField& f, const Point4& p);

/// (-d_r f, -(d_u f + ((2m - r)/r) d_r f), d_theta f / r^2, d_phi f / (r^2 sin^2 theta)).
Vec4 vaidya_gradient_closed_form(const MassFunction& m, const ScalarField& f, const Point4& p);

enum class PotentialConvention { as_printed_r5, g2_consistent };

struct PotentialSpec {
    double kappa = 0.0;
    double Psi = 0.0;
    double Psi2 = 0.0;
    PotentialConvention convention = PotentialConvention::g2_consistent;
};

/// as_printed_r5: f = -(kappa u/2)(r - u/2) - Psi (r + u) + Psi2
/// g2_consistent: f = -kappa u r/2 - kappa u^2/4 - Psi (r + u) + Psi2
ScalarField potential_field(const PotentialSpec& spec);

struct GradientDeviation {
    Vec4 max_per_component{};
    double max = 0.0;
    double rms = 0.0;
    Point4 worst_point{};
    std::size_t worst_component = 0;
};

/// Max |grad f - X| over the grid on the m = 0 metric. Throws ExistenceViolation
/// when psi3 != 0, since no potential exists then.
GradientDeviation verify_gradient_soliton(const PotentialSpec& spec, const SolvedSolution& s,
                                          std::span<const Point4> grid);

enum class FlowKind { expanding, steady, shrinking };

FlowKind classify(double beta);
std::string to_string(FlowKind k);

}  // namespace vaidya
