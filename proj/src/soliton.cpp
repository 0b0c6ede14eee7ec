#include "vaidya/soliton.hpp"

#include <cmath>
#include <numbers>

#include "vaidya/errors.hpp"

namespace vaidya {

SolitonParams SolitonParams::from_beta_p(double beta, double p, double alpha)
{
    if (!std::isfinite(beta) || !std::isfinite(p) || !std::isfinite(alpha))
        throw InvalidInput("soliton parameters must be finite");
    SolitonParams s;
    s.beta = beta;
    s.p = p;
    s.alpha = alpha;
    s.kappa = 2.0 * beta - (p + 2.0 / n);
    return s;
}

SolitonParams SolitonParams::from_kappa(double kappa, double alpha)
{
    if (!std::isfinite(kappa) || !std::isfinite(alpha)) throw InvalidInput("soliton parameters must be finite");
    SolitonParams s;
    s.alpha = alpha;
    s.kappa = kappa;
    return s;
}

Sym4 soliton_residual(const JetMatrix& g, const CurvatureBundle& curv, const std::array<Jet2, 4>& x,
                      const SolitonParams& params)
{
    const Sym4 lie = lie_derivative(g, x);
    const double conformal = params.kappa + 2.0 * params.alpha * curv.scalar;
    return Sym4::generate([&](std::size_t i, std::size_t j) {
        const double ric = 0.5 * (curv.ricci(i, j) + curv.ricci(j, i));
        return lie(i, j) + 2.0 * ric - conformal * curv.metric(i, j);
    });
}

Sym4 soliton_residual(const Metric4& g, const VectorField4& x, const SolitonParams& params, const Point4& p)
{
    require_in_domain(p);
    const JetMatrix gj = g.evaluate(p);
    return soliton_residual(gj, curvature(gj), x.evaluate(p), params);
}

std::array<double, 10> pde_system_residuals(const VectorField4& x, const MassFunction& mass, double kappa,
                                            const Point4& p)
{
    require_in_domain(p);
    const auto [A, B, C, D] = x.evaluate(p);
    const MassValue mv = mass.at(p.u);
    const double m = mv.m;
    const double dm = mv.dm;
    const double r = p.r;
    const double s = std::sin(p.theta);
    const double c = std::cos(p.theta);
    const double g11 = (2.0 * m - r) / r;
    constexpr std::size_t u = 0, rr = 1, th = 2, ph = 3;

    return {
        g11 * A.grad(u) - B.grad(u) + dm * A.value() / r - m * B.value() / (r * r) + 2.0 * dm / (r * r)
            - 0.5 * kappa * g11,
        A.grad(rr),
        r * B.value() + r * r * C.grad(th) - kappa * r * r / 2.0,
        s * s * B.value() + r * s * c * C.value() + r * s * s * D.grad(ph) - r * kappa * s * s / 2.0,
        g11 * A.grad(rr) - B.grad(rr) - A.grad(u) + kappa,
        g11 * A.grad(th) - B.grad(th) + r * r * C.grad(u),
        g11 * A.grad(ph) - B.grad(ph) + r * r * s * s * D.grad(u),
        r * r * C.grad(rr) - A.grad(th),
        r * r * s * s * D.grad(rr) - A.grad(ph),
        r * r * C.grad(ph) + r * r * s * s * D.grad(th),
    };
}

double equation_residual_factor(std::size_t k, const Point4& p)
{
    switch (k) {
    case 0: return 0.5;
    case 1: return -0.5;
    case 2: return 0.5;
    case 3: return 0.5 / p.r;
    default: return 1.0;
    }
}

std::vector<CorrespondenceEntry> correspondence_factors(const VectorField4& x, const MassFunction& m,
                                                        const SolitonParams& params, std::span<const Point4> grid,
                                                        double tolerance)
{
    const Metric4 g = vaidya_metric(m);
    std::vector<std::array<double, 10>> eqs;
    std::vector<Sym4> res;
    eqs.reserve(grid.size());
    res.reserve(grid.size());
    for (const Point4& p : grid) {
        eqs.push_back(pde_system_residuals(x, m, params.kappa, p));
        res.push_back(soliton_residual(g, x, params, p));
    }

    std::vector<CorrespondenceEntry> out;
    for (std::size_t k = 0; k < 10; ++k) {
        CorrespondenceEntry e;
        e.equation = static_cast<int>(k) + 1;
        e.component = kEquationComponent[k];
        const auto [i, j] = e.component;
        double num = 0.0;
        double den = 0.0;
        for (std::size_t n = 0; n < grid.size(); ++n) {
            num += eqs[n][k] * res[n](i, j);
            den += res[n](i, j) * res[n](i, j);
        }
        if (den == 0.0) {
            // Residual component vanishes on the whole grid: no ratio to fit.
            e.factor = 0.0;
            for (std::size_t n = 0; n < grid.size(); ++n)
                e.fit_residual = std::max(e.fit_residual, std::abs(eqs[n][k]));
            e.constant = false;
            out.push_back(e);
            continue;
        }
        e.factor = num / den;
        for (std::size_t n = 0; n < grid.size(); ++n)
            e.fit_residual = std::max(e.fit_residual, std::abs(eqs[n][k] - e.factor * res[n](i, j)));
        e.constant = e.fit_residual <= tolerance;
        out.push_back(e);
    }
    return out;
}

VectorField4 solved_vector_field(const SolvedSolution& s)
{
    VectorField4 x;
    x.A = [k = s.kappa, Psi = s.Psi](const Point4& p) { return 0.5 * k * jet_coord(Coord::u, p) + Psi; };
    x.B = [k = s.kappa](const Point4& p) { return 0.5 * k * jet_coord(Coord::r, p); };
    x.C = const_field(0.0);
    x.D = const_field(s.psi3);
    return x;
}

namespace {

void require_band(const SeparationFamily& fam, const Point4& p, const DomainLimits& limits)
{
    if (fam.Gamma > 0.0
        && !(p.theta > limits.theta_min && p.theta < std::numbers::pi / 2.0 - limits.theta_min))
        throw SingularEvaluation("separation family: theta outside (theta_min, pi/2 - theta_min)", p);
}

Jet2 tan_power(const Jet2& theta, double exponent)
{
    if (exponent == 0.0) return jet_const(1.0);
    const Jet2 t = tan(theta);
    const double rounded = std::round(exponent);
    if (rounded == exponent && std::abs(exponent) < 64.0) return pow_int(t, static_cast<int>(rounded));
    return exp(exponent * log(t));
}

}  // namespace

SeparationFields separation_family_fields(const SeparationFamily& fam, const DomainLimits& limits)
{
    if (!(fam.Gamma >= 0.0) || !std::isfinite(fam.Gamma)) throw InvalidInput("separation family needs Gamma >= 0");
    const double root = std::sqrt(fam.Gamma);

    SeparationFields out;
    out.D = [fam, root, limits](const Point4& p) {
        require_band(fam, p, limits);
        const Jet2 phi = jet_coord(Coord::phi, p);
        const Jet2 angular = fam.psi1 * exp(root * phi) + fam.psi2 * exp(-root * phi);
        return angular * tan_power(jet_coord(Coord::theta, p), fam.Gamma);
    };
    out.C = [fam, root, limits](const Point4& p) {
        require_band(fam, p, limits);
        if (fam.Gamma == 0.0) return jet_const(0.0);
        const Jet2 phi = jet_coord(Coord::phi, p);
        const Jet2 angular = fam.psi1 * exp(root * phi) - fam.psi2 * exp(-root * phi);
        return -root * angular * tan_power(jet_coord(Coord::theta, p), fam.Gamma + 1.0);
    };
    return out;
}

double separation_pde_residual(const SeparationFamily& fam, const Point4& p)
{
    const Jet2 d = evaluate(separation_family_fields(fam).D, p);
    constexpr std::size_t th = 2, ph = 3;
    return d.hess(ph, ph) - std::sin(p.theta) * std::cos(p.theta) * d.grad(th);
}

double gamma_forcing_residual(const SeparationFamily& fam, double kappa, const Point4& p)
{
    const SeparationFields f = separation_family_fields(fam);
    VectorField4 x;
    x.B = [kappa](const Point4& q) { return 0.5 * kappa * jet_coord(Coord::r, q); };
    x.C = f.C;
    x.D = f.D;
    return pde_system_residuals(x, MassFunction::zero(), kappa, p)[2];
}

Vec4 metric_gradient(const Metric4& g, const ScalarField& f, const Point4& p)
{
    require_in_domain(p);
    const Eigen::Matrix4d inv = invert_values(g.evaluate(p).values());
    const Jet2 fj = evaluate(f, p);
    Vec4 out{};
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) out[j] += inv(k, j) * fj.grad(k);
    return out;
}

Vec4 vaidya_gradient_closed_form(const MassFunction& m, const ScalarField& f, const Point4& p)
{
    require_in_domain(p);
    const Jet2 fj = evaluate(f, p);
    const double r = p.r;
    const double s = std::sin(p.theta);
    const double g11 = (2.0 * m.at(p.u).m - r) / r;
    return {-fj.grad(1), -(fj.grad(0) + g11 * fj.grad(1)), fj.grad(2) / (r * r), fj.grad(3) / (r * r * s * s)};
}

ScalarField potential_field(const PotentialSpec& spec)
{
    return [spec](const Point4& p) {
        const Jet2 u = jet_coord(Coord::u, p);
        const Jet2 r = jet_coord(Coord::r, p);
        const Jet2 tail = -spec.Psi * (r + u) + spec.Psi2;
        if (spec.convention == PotentialConvention::as_printed_r5)
            return -(0.5 * spec.kappa * u) * (r - 0.5 * u) + tail;
        return -0.5 * spec.kappa * u * r - 0.25 * spec.kappa * u * u + tail;
    };
}

GradientDeviation verify_gradient_soliton(const PotentialSpec& spec, const SolvedSolution& s,
                                          std::span<const Point4> grid)
{
    if (s.psi3 != 0.0)
        throw ExistenceViolation("a scalar potential exists only for psi3 = 0 (got psi3 = " + format_double(s.psi3)
                                 + ")");
    const Metric4 g = vaidya_metric(MassFunction::zero());
    const VectorField4 x = solved_vector_field(s);
    const ScalarField f = potential_field(spec);

    GradientDeviation out;
    double sum_sq = 0.0;
    std::size_t count = 0;
    for (const Point4& p : grid) {
        const Vec4 grad = metric_gradient(g, f, p);
        const auto xv = x.evaluate(p);
        for (std::size_t k = 0; k < 4; ++k) {
            const double dev = std::abs(grad[k] - xv[k].value());
            sum_sq += dev * dev;
            ++count;
            out.max_per_component[k] = std::max(out.max_per_component[k], dev);
            if (dev > out.max) {
                out.max = dev;
                out.worst_point = p;
                out.worst_component = k;
            }
        }
    }
    if (count) out.rms = std::sqrt(sum_sq / static_cast<double>(count));
    return out;
}

FlowKind classify(double beta)
{
    if (!std::isfinite(beta)) throw InvalidInput("classify: beta must be finite");
    if (beta > 0.0) return FlowKind::expanding;
    if (beta < 0.0) return FlowKind::shrinking;
    return FlowKind::steady;
}

std::string to_string(FlowKind k)
{
    switch (k) {
    case FlowKind::expanding: return "expanding";
    case FlowKind::steady: return "steady";
    case FlowKind::shrinking: return "shrinking";
    }
    return "steady";
}

}  // namespace vaidya
