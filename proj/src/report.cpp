#include "vaidya/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "vaidya/errors.hpp"

namespace vaidya {

namespace {

using nlohmann::json;

std::string pair_label(std::size_t i, std::size_t j)
{
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string riemann_label(std::size_t a, std::size_t b, std::size_t c, std::size_t d)
{
    return "R_" + std::to_string(a + 1) + std::to_string(b + 1) + std::to_string(c + 1) + std::to_string(d + 1);
}

/// Running max/RMS with the worst offender.
class Accumulator {
public:
    template <typename Label>
    void add(double v, const Point4& p, Label&& label)
    {
        v = std::abs(v);
        sum_sq_ += v * v;
        ++count_;
        if (v > max_ || !std::isfinite(v) || count_ == 1) {
            max_ = v;
            worst_ = p;
            component_ = label();
        }
    }

    Check finish(std::string name, double tolerance, bool gating = true, std::string detail = {}) const
    {
        Check c;
        c.name = std::move(name);
        c.max = max_;
        c.rms = count_ ? std::sqrt(sum_sq_ / static_cast<double>(count_)) : 0.0;
        if (count_) c.worst_point = worst_;
        c.worst_component = component_;
        c.tolerance = tolerance;
        c.pass = std::isfinite(max_) && max_ <= tolerance;
        c.gating = gating;
        c.detail = std::move(detail);
        return c;
    }

private:
    double max_ = 0.0;
    double sum_sq_ = 0.0;
    std::size_t count_ = 0;
    Point4 worst_{};
    std::string component_;
};

struct Context {
    const RunConfig& config;
    SampleGrid grid;
    std::vector<Point4> points;
};

std::vector<MassFunction> masses_or(const RunConfig& cfg, const std::vector<std::string_view>& fallback)
{
    std::vector<MassFunction> out;
    if (cfg.masses.empty())
        for (auto s : fallback) out.push_back(MassFunction::parse(s));
    else
        for (const auto& s : cfg.masses) out.push_back(MassFunction::parse(s));
    return out;
}

const std::vector<std::string_view> kCurvatureMasses = {"zero", "const:1", "linear:1,0", "sinoff:1,2"};

std::vector<Check> curvature_checks(const Context& ctx)
{
    std::vector<Check> out;
    const double tol = ctx.config.tol.identity;
    constexpr double h = 1e-5;

    for (const MassFunction& m : masses_or(ctx.config, kCurvatureMasses)) {
        const std::string tag = "[" + m.spec() + "]";
        const Metric4 g = vaidya_metric(m);
        Accumulator ricci, scalar, sym, inverse, inverse_fd, listed;
        std::map<std::string, double> listed_worst;
        for (const Point4& p : ctx.points) {
            const JetMatrix gj = g.evaluate(p);
            const CurvatureBundle b = curvature(gj);
            const Sym4 cf = closed_form_ricci(m, p);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    ricci.add(b.ricci(i, j) - cf(i, j), p, [&] { return pair_label(i, j); });
            scalar.add(b.scalar, p, [] { return std::string("R"); });

            const auto& R = b.riemann;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t bb = 0; bb < 4; ++bb)
                    for (std::size_t c = 0; c < 4; ++c)
                        for (std::size_t d = 0; d < 4; ++d) {
                            auto label = [&] { return riemann_label(a, bb, c, d); };
                            sym.add(R[a][bb][c][d] + R[bb][a][c][d], p, label);
                            sym.add(R[a][bb][c][d] + R[a][bb][d][c], p, label);
                            sym.add(R[a][bb][c][d] - R[c][d][a][bb], p, label);
                            sym.add(R[a][bb][c][d] + R[a][c][d][bb] + R[a][d][bb][c], p, label);
                        }

            const JetMatrix inv = inverse_metric(gj);
            const Eigen::Matrix4d closed = vaidya_inverse_closed_form(m, p);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    inverse.add(inv(i, j).value() - closed(i, j), p, [&] { return pair_label(i, j); });

            for (std::size_t k = 0; k < 4; ++k) {
                Point4 lo = p, hi = p;
                auto shift = [&](Point4& q, double s) {
                    switch (k) {
                    case 0: q.u += s; break;
                    case 1: q.r += s; break;
                    case 2: q.theta += s; break;
                    default: q.phi += s; break;
                    }
                };
                shift(lo, -h);
                shift(hi, h);
                const JetMatrix ghi = g.evaluate(hi);
                const JetMatrix glo = g.evaluate(lo);
                const Eigen::Matrix4d fd = (invert_values(ghi.values()) - invert_values(glo.values())) / (2.0 * h);
                const JetMatrix ihi = inverse_metric(ghi);
                const JetMatrix ilo = inverse_metric(glo);
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) {
                        const double first = inv(i, j).grad(k) - fd(i, j);
                        inverse_fd.add(first / std::max(1.0, std::abs(fd(i, j))), p, [&] {
                            return "d" + std::to_string(k + 1) + " g^" + pair_label(i, j);
                        });
                        for (std::size_t l = 0; l < 4; ++l) {
                            const double fd2 = (ihi(i, j).grad(l) - ilo(i, j).grad(l)) / (2.0 * h);
                            inverse_fd.add((inv(i, j).hess(k, l) - fd2) / std::max(1.0, std::abs(fd2)), p, [&] {
                                return "d" + std::to_string(k + 1) + "d" + std::to_string(l + 1) + " g^"
                                       + pair_label(i, j);
                            });
                        }
                    }
            }

            const RiemannComparison rc = compare_riemann_oracle(m, p);
            for (const auto& e : rc.entries) {
                listed.add(e.difference, p, [&] { return e.label; });
                listed_worst[e.label] = std::max(listed_worst[e.label], e.difference);
            }
        }
        out.push_back(ricci.finish("ricci_closed_form" + tag, tol));
        out.push_back(scalar.finish("scalar_curvature" + tag, tol));
        out.push_back(sym.finish("riemann_symmetries" + tag, tol));
        out.push_back(inverse.finish("inverse_metric_closed_form" + tag, tol));
        out.push_back(inverse_fd.finish("inverse_metric_fd" + tag, ctx.config.tol.fd));
        std::string mismatched;
        for (const auto& [label, worst] : listed_worst)
            if (worst > tol) mismatched += (mismatched.empty() ? "" : ", ") + label + " (max " + format_double(worst) + ")";
        out.push_back(listed.finish("riemann_listed_components" + tag, tol, false,
                                    "tabulated Riemann components vs -1 * numeric tensor; mismatches are findings: "
                                        + (mismatched.empty() ? std::string("none") : mismatched)));
    }
    return out;
}

std::vector<Check> lie_checks(const Context& ctx)
{
    constexpr std::size_t kFields = 10;
    std::vector<Check> out;
    const double tol = ctx.config.tol.identity;
    const SolitonParams params = ctx.config.params();
    std::vector<VectorField4> fields;
    for (std::size_t s = 0; s < kFields; ++s) fields.push_back(random_polytrig_field(1000 + s));

    for (const MassFunction& m : masses_or(ctx.config, kCurvatureMasses)) {
        const std::string tag = "[" + m.spec() + "]";
        const Metric4 g = vaidya_metric(m);
        Accumulator transcribed, correspondence, linearity;
        std::array<double, 16> transcribed_worst{};
        for (const Point4& p : ctx.points) {
            const JetMatrix gj = g.evaluate(p);
            const CurvatureBundle curv = curvature(gj);
            for (std::size_t f = 0; f < fields.size(); ++f) {
                const VectorField4& x = fields[f];
                const auto xj = x.evaluate(p);
                const Sym4 lie = lie_derivative(gj, xj);
                const auto printed = lie_vaidya_transcribed(x, m, p);
                for (std::size_t q = 0; q < 16; ++q) {
                    const std::size_t i = q / 4, j = q % 4;
                    double generic = lie(i, j);
                    if (q == 0) generic -= vaidya_advection_11(x, m, p);
                    transcribed.add(generic - printed[q], p, [&] { return pair_label(i, j); });
                    transcribed_worst[q] = std::max(transcribed_worst[q], std::abs(generic - printed[q]));
                }

                const Sym4 res = soliton_residual(gj, curv, xj, params);
                const auto eqs = pde_system_residuals(x, m, params.kappa, p);
                for (std::size_t k = 0; k < 10; ++k) {
                    const auto [i, j] = kEquationComponent[k];
                    correspondence.add(eqs[k] - equation_residual_factor(k, p) * res(i, j), p,
                                       [&] { return "eq" + std::to_string(k + 1) + " vs " + pair_label(i, j); });
                }

                const VectorField4& y = fields[(f + 1) % fields.size()];
                const Sym4 combined = lie_derivative(gj, VectorField4::combine(0.75, x, -1.25, y).evaluate(p));
                const Sym4 separate = 0.75 * lie - 1.25 * lie_derivative(gj, y.evaluate(p));
                const Sym4 diff = combined - separate;
                for (auto [i, j] : kUpperPairs) linearity.add(diff(i, j), p, [&] { return pair_label(i, j); });
            }
        }
        std::string mismatched;
        for (std::size_t q = 0; q < 16; ++q)
            if (q / 4 <= q % 4 && transcribed_worst[q] > tol)
                mismatched += (mismatched.empty() ? "" : ", ") + pair_label(q / 4, q % 4) + " (max "
                              + format_double(transcribed_worst[q]) + ")";
        out.push_back(transcribed.finish(
            "lie_transcribed_vs_generic" + tag, tol, false,
            "tabulated Lie components vs the general formula with the advection term restored on (1,1); "
            "mismatches are findings: "
                + (mismatched.empty() ? std::string("none") : mismatched)));
        out.push_back(correspondence.finish("pde_system_vs_soliton_residual" + tag, tol, true,
                                            "equation k = c_k * residual component, c = 1/2,-1/2,1/2,1/(2r),1,..."));
        out.push_back(linearity.finish("lie_linearity" + tag, tol));
    }
    return out;
}

std::vector<Check> soliton_checks(const Context& ctx)
{
    std::vector<Check> out;
    const SolitonParams params = ctx.config.params();
    const SolvedSolution s{params.kappa, ctx.config.Psi, ctx.config.psi3};
    const VectorField4 x = solved_vector_field(s);
    for (const MassFunction& m : masses_or(ctx.config, {"zero"})) {
        const std::string tag = "[" + m.spec() + "]";
        const Metric4 g = vaidya_metric(m);
        Accumulator residual, system;
        for (const Point4& p : ctx.points) {
            const Sym4 res = soliton_residual(g, x, params, p);
            for (auto [i, j] : kUpperPairs) residual.add(res(i, j), p, [&] { return pair_label(i, j); });
            const auto eqs = pde_system_residuals(x, m, params.kappa, p);
            for (std::size_t k = 0; k < 10; ++k)
                system.add(eqs[k], p, [&] { return "eq" + std::to_string(k + 1); });
        }
        const std::string detail = "kappa=" + format_double(params.kappa) + " Psi=" + format_double(s.Psi)
                                   + " psi3=" + format_double(s.psi3);
        out.push_back(residual.finish("soliton_residual" + tag, ctx.config.tol.identity, true, detail));
        out.push_back(system.finish("pde_system_residuals" + tag, ctx.config.tol.identity, true, detail));
    }
    return out;
}

std::vector<Check> potential_checks(const Context& ctx)
{
    std::vector<Check> out;
    const SolitonParams params = ctx.config.params();
    const SolvedSolution s{params.kappa, ctx.config.Psi, ctx.config.psi3};
    const double tol = ctx.config.tol.identity;

    for (const MassFunction& m : masses_or(ctx.config, {"zero"})) {
        const PotentialSpec spec{params.kappa, ctx.config.Psi, ctx.config.Psi2, PotentialConvention::g2_consistent};
        const ScalarField f = potential_field(spec);
        const Metric4 g = vaidya_metric(m);
        Accumulator paths;
        for (const Point4& p : ctx.points) {
            const Vec4 a = metric_gradient(g, f, p);
            const Vec4 b = vaidya_gradient_closed_form(m, f, p);
            for (std::size_t k = 0; k < 4; ++k)
                paths.add(a[k] - b[k], p, [&] { return "grad^" + std::to_string(k + 1); });
        }
        out.push_back(paths.finish("gradient_paths[" + m.spec() + "]", tol));
    }

    if (s.psi3 != 0.0) {
        Check c;
        c.name = "potential_existence";
        c.max = std::abs(s.psi3);
        c.rms = c.max;
        c.tolerance = 0.0;
        c.pass = false;
        try {
            verify_gradient_soliton({params.kappa, s.Psi, ctx.config.Psi2, ctx.config.convention}, s, ctx.points);
        } catch (const ExistenceViolation& e) {
            c.detail = e.what();
        }
        out.push_back(c);
        return out;
    }

    for (auto conv : {PotentialConvention::g2_consistent, PotentialConvention::as_printed_r5}) {
        const PotentialSpec spec{params.kappa, s.Psi, ctx.config.Psi2, conv};
        const GradientDeviation dev = verify_gradient_soliton(spec, s, ctx.points);
        Check c;
        c.name = conv == PotentialConvention::g2_consistent ? "potential_gradient[g2]" : "potential_gradient[r5]";
        c.max = dev.max;
        c.rms = dev.rms;
        c.worst_point = dev.worst_point;
        c.worst_component = "grad^" + std::to_string(dev.worst_component + 1);
        c.tolerance = tol;
        c.pass = dev.max <= tol;
        c.gating = conv == ctx.config.convention;
        c.detail = "max |grad f - X| on m=0; per component (u,r,theta,phi): "
                   + format_double(dev.max_per_component[0]) + "," + format_double(dev.max_per_component[1]) + ","
                   + format_double(dev.max_per_component[2]) + "," + format_double(dev.max_per_component[3]);
        out.push_back(c);
    }
    return out;
}

std::vector<Check> classify_checks(const Context& ctx)
{
    Check c;
    c.name = "classify";
    std::optional<double> beta = ctx.config.beta;
    if (!beta && ctx.config.command == "report-all") beta = ctx.config.params().beta;
    if (!beta) {
        if (ctx.config.command == "classify") throw InvalidInput("classify needs --beta");
        c.detail = "skipped: no beta supplied";
        return {c};
    }
    c.detail = to_string(classify(*beta));
    return {c};
}

std::vector<Check> probe_checks(const Context& ctx)
{
    std::vector<Check> out;
    const SolitonParams params = ctx.config.params();
    const auto masses = masses_or(ctx.config, {"zero", "const:1", "linear:1,0"});
    std::vector<std::string> bases;
    if (ctx.config.basis)
        bases = {*ctx.config.basis};
    else if (ctx.config.command == "report-all")
        bases = {"minimal", "extended"};
    else
        bases = {"minimal"};

    for (const auto& name : bases) {
        const BasisSpec basis = BasisSpec::by_name(name);
        const ProbeReport rep = nonexistence_probe(masses, basis, ctx.grid, params, ctx.config.tol.probe_floor,
                                                   ctx.config.tol.probe_ratio);
        std::string floors;
        for (const auto& e : rep.entries) {
            Check c;
            c.name = "fit_floor[" + name + "][" + e.mass + "]";
            c.max = e.fit.max;
            c.rms = e.fit.rms;
            if (e.zero_mass) {
                c.tolerance = rep.baseline_threshold;
                c.pass = e.fit.rms < rep.baseline_threshold;
                c.detail = "zero-mass floor must stay below the baseline threshold";
            } else {
                c.tolerance = rep.separation_ratio * rep.zero_floor;
                c.pass = e.fit.rms > c.tolerance;
                c.detail = "floor must exceed ratio * zero-mass floor";
            }
            c.detail += "; rank " + std::to_string(e.fit.rank) + ", condition " + format_double(e.fit.condition);
            floors += (floors.empty() ? "" : ", ") + e.mass + "=" + format_double(e.fit.rms);
            out.push_back(c);
        }
        Check summary;
        summary.name = "nonexistence_probe[" + name + "]";
        summary.max = rep.zero_floor;
        summary.rms = rep.zero_floor;
        summary.tolerance = rep.baseline_threshold;
        summary.pass = rep.pass;
        summary.detail = "floors: " + floors + "; ratio " + format_double(rep.separation_ratio);
        out.push_back(summary);
    }
    return out;
}

std::vector<Check> separation_checks(const Context& ctx)
{
    constexpr double kForcingThreshold = 1e-3;
    std::vector<Check> out;
    const double tol = ctx.config.tol.identity;
    const double kappa = ctx.config.params().kappa;

    SampleGrid band = ctx.grid;
    if (!ctx.config.grid) band.theta = {0.2, 1.2, 4};
    const std::vector<Point4> pts = band.points();

    std::vector<SeparationFamily> families{{0.0, ctx.config.psi1, ctx.config.psi2}};
    if (ctx.config.Gamma != 0.0) families.push_back({ctx.config.Gamma, ctx.config.psi1, ctx.config.psi2});

    for (const auto& fam : families) {
        const std::string tag = "[Gamma=" + format_double(fam.Gamma) + "]";
        const SeparationFields fields = separation_family_fields(fam);
        Accumulator pde, forcing;
        for (const Point4& p : pts) {
            const double scale = std::max(1.0, std::abs(fam.Gamma * evaluate(fields.D, p).value()));
            pde.add(separation_pde_residual(fam, p) / scale, p, [] { return std::string("Q_d"); });
            forcing.add(gamma_forcing_residual(fam, kappa, p), p, [] { return std::string("(3,3)"); });
        }
        out.push_back(pde.finish("separation_pde" + tag, tol, true, "residual relative to max(1, |Gamma D|)"));

        const bool expect_zero = fam.Gamma == 0.0 || (fam.psi1 == 0.0 && fam.psi2 == 0.0);
        Check c = forcing.finish("gamma_forcing" + tag, expect_zero ? tol : kForcingThreshold);
        c.pass = expect_zero ? forcing.finish("", tol).pass : c.max > kForcingThreshold;
        c.detail = expect_zero ? "Gamma = 0 or psi1 = psi2 = 0: the r^2 d_theta C term must vanish"
                               : "Gamma > 0: the leftover r^2 d_theta C term must be nonzero";
        out.push_back(c);
    }
    return out;
}

json point_json(const std::optional<Point4>& p)
{
    if (!p) return nullptr;
    return json::array({p->u, p->r, p->theta, p->phi});
}

json config_json(const RunConfig& c, const SolitonParams& params, const std::string& grid)
{
    json j;
    j["command"] = c.command;
    j["masses"] = c.masses;
    j["beta"] = params.beta ? json(*params.beta) : json(nullptr);
    j["p"] = params.p ? json(*params.p) : json(nullptr);
    j["alpha"] = params.alpha;
    j["kappa"] = params.kappa;
    j["psi_cap"] = c.Psi;
    j["psi3"] = c.psi3;
    j["psi2_cap"] = c.Psi2;
    j["gamma"] = c.Gamma;
    j["psi1"] = c.psi1;
    j["psi2"] = c.psi2;
    j["grid"] = grid;
    j["basis"] = c.basis ? json(*c.basis) : json(nullptr);
    j["convention"] = c.convention == PotentialConvention::g2_consistent ? "g2" : "r5";
    j["tolerances"] = {{"identity", c.tol.identity},
                       {"fd", c.tol.fd},
                       {"probe_floor", c.tol.probe_floor},
                       {"probe_ratio", c.tol.probe_ratio}};
    j["format"] = to_string(c.format);
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

}  // namespace

OutputFormat parse_format(std::string_view text)
{
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "text") return OutputFormat::text;
    throw InvalidInput("unknown output format '" + std::string(text) + "'");
}

std::string to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
    }
    return "json";
}

void Tolerances::apply(std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("tolerance override must be name=value");
    const std::string name(assignment.substr(0, eq));
    const std::string value(assignment.substr(eq + 1));
    double v = 0.0;
    try {
        std::size_t used = 0;
        v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InvalidInput("bad tolerance value '" + value + "'");
    }
    if (!std::isfinite(v) || v < 0.0) throw InvalidInput("tolerance must be finite and non-negative");
    if (name == "identity")
        identity = v;
    else if (name == "fd")
        fd = v;
    else if (name == "probe_floor")
        probe_floor = v;
    else if (name == "probe_ratio")
        probe_ratio = v;
    else
        throw InvalidInput("unknown tolerance '" + name + "' (identity, fd, probe_floor, probe_ratio)");
}

SolitonParams RunConfig::params() const
{
    if (beta.has_value() != p.has_value()) throw InvalidInput("--beta and --p must be given together");
    if (beta) {
        SolitonParams s = SolitonParams::from_beta_p(*beta, *p, alpha);
        if (kappa && std::abs(*kappa - s.kappa) > 1e-12)
            throw InvalidInput("--kappa " + format_double(*kappa) + " is inconsistent with 2*beta - (p + 1/2) = "
                               + format_double(s.kappa));
        return s;
    }
    if (kappa) return SolitonParams::from_kappa(*kappa, alpha);
    return SolitonParams::from_beta_p(1.0, 0.5, alpha);
}

bool ResidualReport::pass() const noexcept
{
    for (const auto& c : checks)
        if (c.gating && !c.pass) return false;
    return true;
}

int exit_status(const ResidualReport& report) noexcept { return report.pass() ? 0 : 1; }

ResidualReport run(const RunConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    bool known = false;
    for (auto c : kCommands) known = known || c == config.command;
    if (!known) throw InvalidInput("unknown command '" + config.command + "'");

    // Validate every user-facing input up front so usage errors never surface
    // half-way through a run.
    for (const auto& m : config.masses) MassFunction::parse(m);
    if (config.basis) BasisSpec::by_name(*config.basis);
    const bool is_classify = config.command == "classify";
    const SolitonParams params = is_classify && !config.kappa && !config.p
                                     ? SolitonParams::from_kappa(0.0, config.alpha)
                                     : config.params();

    Context ctx{config, config.grid ? SampleGrid::parse(*config.grid) : SampleGrid{}, {}};
    ctx.points = ctx.grid.points();

    ResidualReport report;
    report.config_json = config_json(config, params, ctx.grid.spec()).dump();
    auto append = [&](std::vector<Check> more) {
        for (auto& c : more) report.checks.push_back(std::move(c));
    };
    const std::string& cmd = config.command;
    const bool all = cmd == "report-all";
    if (all || cmd == "curvature") append(curvature_checks(ctx));
    if (all || cmd == "lie") append(lie_checks(ctx));
    if (all || cmd == "soliton-verify") append(soliton_checks(ctx));
    if (all || cmd == "potential-verify") append(potential_checks(ctx));
    if (all || cmd == "classify") append(classify_checks(ctx));
    if (all || cmd == "fit-probe") append(probe_checks(ctx));
    if (all || cmd == "separation-verify") append(separation_checks(ctx));

    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_json(const ResidualReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"max", c.max},
                          {"rms", c.rms},
                          {"worst_point", point_json(c.worst_point)},
                          {"worst_component", c.worst_component},
                          {"tolerance", c.tolerance},
                          {"gating", c.gating},
                          {"verdict", c.pass ? "pass" : "fail"},
                          {"detail", c.detail}});
    }
    json j;
    j["config"] = report.config_json.empty() ? json::object() : json::parse(report.config_json);
    j["checks"] = std::move(checks);
    j["verdict"] = report.pass() ? "pass" : "fail";
    j["version"] = report.version;
    j["wall_time_s"] = report.wall_time_s;
    return j.dump(2) + "\n";
}

std::string to_csv(const ResidualReport& report)
{
    std::ostringstream os;
    os << "name,max,rms,worst_point,worst_component,tolerance,gating,verdict,detail\n";
    for (const auto& c : report.checks) {
        std::string pt;
        if (c.worst_point)
            pt = format_double(c.worst_point->u) + " " + format_double(c.worst_point->r) + " "
                 + format_double(c.worst_point->theta) + " " + format_double(c.worst_point->phi);
        os << csv_field(c.name) << ',' << format_double(c.max) << ',' << format_double(c.rms) << ',' << pt << ','
           << csv_field(c.worst_component) << ',' << format_double(c.tolerance) << ','
           << (c.gating ? "true" : "false") << ',' << (c.pass ? "pass" : "fail") << ',' << csv_field(c.detail)
           << '\n';
    }
    return os.str();
}

std::string to_text(const ResidualReport& report)
{
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.gating) os << " (finding)";
        os << "  max=" << format_double(c.max) << " rms=" << format_double(c.rms);
        if (!c.worst_component.empty()) os << " worst=" << c.worst_component;
        if (c.worst_point) os << " at " << to_string(*c.worst_point);
        if (!c.detail.empty()) os << "\n    " << c.detail;
        os << '\n';
    }
    os << "verdict: " << (report.pass() ? "pass" : "fail") << "  (" << report.checks.size() << " checks, version "
       << report.version << ")\n";
    return os.str();
}

std::size_t emit(const ResidualReport& report, OutputFormat format, const std::optional<std::string>& path,
                 std::ostream& stdout_stream)
{
    std::string body;
    switch (format) {
    case OutputFormat::json: body = to_json(report); break;
    case OutputFormat::csv: body = to_csv(report); break;
    case OutputFormat::text: body = to_text(report); break;
    }
    if (!path || path->empty() || *path == "-") {
        stdout_stream << body;
        stdout_stream.flush();
        return body.size();
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + *path + "' for writing");
    file << body;
    file.flush();
    if (!file) throw std::runtime_error("failed writing '" + *path + "'");
    return body.size();
}

}  // namespace vaidya
