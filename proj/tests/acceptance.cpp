// Acceptance runner: one line per criterion, nonzero exit when any fails.
// Usage: acceptance [path-to-vaidya-cli]

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vaidya/errors.hpp"
#include "vaidya/geometry.hpp"
#include "vaidya/lsq.hpp"
#include "vaidya/soliton.hpp"

using namespace vaidya;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
};

const char* const kMasses[] = {"zero", "const:1", "linear:1,0", "sinoff:1,2"};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Outcome ricci_closed_form()
{
    const auto pts = SampleGrid{}.points();
    double worst = 0.0;
    for (const char* spec : kMasses) {
        const MassFunction m = MassFunction::parse(spec);
        const Metric4 g = vaidya_metric(m);
        for (const Point4& p : pts) {
            const CurvatureBundle c = curvature(g, p);
            const Sym4 want = closed_form_ricci(m, p);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) worst = std::max(worst, std::abs(c.ricci(i, j) - want(i, j)));
        }
    }
    const double spot = curvature(vaidya_metric(MassFunction::linear(1, 0)), {1.0, 2.0, 1.0, 0.0}).ricci(0, 0);
    const bool ok = worst < 1e-9 && std::abs(spot - 0.5) < 1e-9;
    return {ok, "max |Ric - closed form| = " + fmt(worst) + " (tol 1e-9), Ric_11(m=u, r=2) = " + fmt(spot)};
}

Outcome scalar_curvature()
{
    const auto pts = SampleGrid{}.points();
    double worst = 0.0;
    for (const char* spec : kMasses) {
        const Metric4 g = vaidya_metric(MassFunction::parse(spec));
        for (const Point4& p : pts) worst = std::max(worst, std::abs(curvature(g, p).scalar));
    }
    return {worst < 1e-9, "max |R| = " + fmt(worst) + " (tol 1e-9)"};
}

Outcome riemann_symmetries(const std::filesystem::path& archive)
{
    const auto pts = SampleGrid{}.points();
    double anti = 0.0, pair = 0.0, bianchi = 0.0;
    for (const char* spec : kMasses) {
        const Metric4 g = vaidya_metric(MassFunction::parse(spec));
        for (const Point4& p : pts) {
            const Rank4& R = curvature(g, p).riemann;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b)
                    for (std::size_t c = 0; c < 4; ++c)
                        for (std::size_t d = 0; d < 4; ++d) {
                            anti = std::max({anti, std::abs(R[a][b][c][d] + R[b][a][c][d]),
                                             std::abs(R[a][b][c][d] + R[a][b][d][c])});
                            pair = std::max(pair, std::abs(R[a][b][c][d] - R[c][d][a][b]));
                            bianchi = std::max(bianchi, std::abs(R[a][b][c][d] + R[a][c][d][b] + R[a][d][b][c]));
                        }
        }
    }

    json entries = json::array();
    std::vector<std::string> mismatched;
    for (const char* spec : kMasses) {
        const RiemannComparison cmp = compare_riemann_oracle(MassFunction::parse(spec), {1.0, 2.0, 1.0, 0.5});
        for (const auto& e : cmp.entries) {
            entries.push_back({{"mass", spec},
                               {"component", e.label},
                               {"listed", e.listed},
                               {"numeric", e.numeric},
                               {"difference", e.difference}});
            if (e.difference > 1e-9) mismatched.push_back(std::string(spec) + ":" + e.label);
        }
    }
    std::ofstream(archive) << json{{"sign", kListedRiemannSign}, {"entries", entries}}.dump(2) << '\n';

    std::string findings;
    for (const auto& s : mismatched) findings += (findings.empty() ? "" : ",") + s;
    const bool ok = anti < 1e-9 && pair < 1e-9 && bianchi < 1e-9;
    return {ok, "antisym " + fmt(anti) + ", pair " + fmt(pair) + ", bianchi " + fmt(bianchi)
                    + " (tol 1e-9); listed-component findings [" + findings + "] archived to "
                    + archive.filename().string()};
}

Outcome lie_equivalence()
{
    std::mt19937_64 rng(2024);
    double off = 0.0, e11 = 0.0, e44 = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const VectorField4 x = random_polytrig_field(seed);
        const MassFunction m = MassFunction::parse(kMasses[seed % 4]);
        const Point4 p{uniform(rng, -2, 2), uniform(rng, 1, 4), uniform(rng, 0.4, 2.7), uniform(rng, 0, 6.28)};
        const Sym4 generic = lie_derivative(vaidya_metric(m), x, p);
        const auto printed = lie_vaidya_transcribed(x, m, p);
        for (std::size_t q = 1; q < 15; ++q) off = std::max(off, std::abs(generic(q / 4, q % 4) - printed[q]));
        e11 = std::max(e11, std::abs(generic(0, 0) - (printed[0] + vaidya_advection_11(x, m, p))));
        e44 = std::max(e44, std::abs(generic(3, 3) - printed[15]));
    }

    const auto factors = correspondence_factors(random_polytrig_field(7), MassFunction::linear(1, 0.5),
                                                SolitonParams::from_kappa(0.7), SampleGrid{}.points());
    const auto& f1 = factors[0];
    const auto& f5 = factors[4];
    const bool factors_ok = f1.constant && std::abs(f1.factor - 0.5) < 1e-12 && f1.fit_residual < 1e-9 && f5.constant
                            && std::abs(f5.factor - 1.0) < 1e-12 && f5.fit_residual < 1e-9;

    const bool ok = off < 1e-9 && e11 < 1e-9 && e44 < 1e-9 && factors_ok;
    return {ok, "entries (1,2)..(4,3) max " + fmt(off) + "; (1,1) with advection max " + fmt(e11) + "; (4,4) max "
                    + fmt(e44) + " (tol 1e-9); factors eq1 " + fmt(f1.factor) + " fit " + fmt(f1.fit_residual)
                    + ", eq5 " + fmt(f5.factor) + " fit " + fmt(f5.fit_residual)};
}

Outcome solved_certificate()
{
    std::mt19937_64 rng(7);
    const auto pts = SampleGrid{}.points();
    const Metric4 g = vaidya_metric(MassFunction::zero());
    double res = 0.0, pde = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto params = SolitonParams::from_beta_p(uniform(rng, -2, 2), uniform(rng, -2, 2));
        const VectorField4 x = solved_vector_field({params.kappa, uniform(rng, -3, 3), uniform(rng, -3, 3)});
        for (const Point4& p : pts) {
            res = std::max(res, soliton_residual(g, x, params, p).max_abs());
            for (double v : pde_system_residuals(x, MassFunction::zero(), params.kappa, p)) pde = std::max(pde, std::abs(v));
        }
    }
    return {res < 1e-10 && pde < 1e-12,
            "soliton residual max " + fmt(res) + " (tol 1e-10), system max " + fmt(pde) + " (tol 1e-12)"};
}

Outcome nonexistence_probe_criterion()
{
    const std::vector<MassFunction> masses{MassFunction::zero(), MassFunction::constant(1), MassFunction::linear(1, 0)};
    bool ok = true;
    std::string summary;
    for (const auto& basis : {BasisSpec::minimal(), BasisSpec::extended()}) {
        const ProbeReport rep = nonexistence_probe(masses, basis, SampleGrid{}, SolitonParams::from_beta_p(1, 0.5));
        bool basis_ok = rep.zero_floor < 1e-8;
        for (const auto& e : rep.entries)
            if (!e.zero_mass) basis_ok = basis_ok && e.fit.rms > 1e3 * rep.zero_floor;
        ok = ok && basis_ok;
        summary += (summary.empty() ? "" : "; ") + basis.name + " floors zero " + fmt(rep.zero_floor) + ", const:1 "
                   + fmt(rep.entries[1].fit.rms) + ", linear:1,0 " + fmt(rep.entries[2].fit.rms);
    }
    return {ok, summary};
}

Outcome potential_verification()
{
    const auto pts = SampleGrid{}.points();
    const double g2 =
        verify_gradient_soliton({2.0, 0.5, 1.0, PotentialConvention::g2_consistent}, {2.0, 0.5, 0.0}, pts).max;

    std::vector<double> r5;
    for (double umax : {1.0, 2.0, 4.0}) {
        SampleGrid grid;
        grid.u = {0.0, umax, 3};
        r5.push_back(
            verify_gradient_soliton({2.0, 0.5, 1.0, PotentialConvention::as_printed_r5}, {2.0, 0.5, 0.0}, grid.points())
                .max);
    }
    const bool grows = r5[0] > 1e-6 && r5[1] > r5[0] && r5[2] > r5[1];

    bool raised = false;
    try {
        verify_gradient_soliton({2.0, 0.5, 1.0}, {2.0, 0.5, 0.3}, pts);
    } catch (const ExistenceViolation&) {
        raised = true;
    }
    return {g2 < 1e-10 && grows && raised, "g2 max " + fmt(g2) + " (tol 1e-10); r5 max at |u|<=1,2,4: " + fmt(r5[0])
                                               + ", " + fmt(r5[1]) + ", " + fmt(r5[2])
                                               + "; psi3 != 0 raises: " + (raised ? "yes" : "no")};
}

Outcome separation_family()
{
    std::mt19937_64 rng(11);
    double pde = 0.0;
    for (double gamma : {0.0, 1.0, 4.0})
        for (int n = 0; n < 20; ++n) {
            const SeparationFamily fam{gamma, uniform(rng, -1, 1), uniform(rng, -1, 1)};
            const Point4 p{uniform(rng, 0, 2), uniform(rng, 1, 4), uniform(rng, 0.2, 1.2), uniform(rng, 0, 1.5)};
            pde = std::max(pde, std::abs(separation_pde_residual(fam, p)));
        }

    double zero = 0.0, forced = 0.0;
    for (int n = 0; n < 20; ++n) {
        const Point4 p{0.0, uniform(rng, 1, 4), uniform(rng, 0.2, 1.2), uniform(rng, 0, 1.5)};
        zero = std::max(zero, std::abs(gamma_forcing_residual({0.0, uniform(rng, -1, 1), uniform(rng, -1, 1)}, 1.0, p)));
        forced = std::max(forced, std::abs(gamma_forcing_residual({1.0, 1.0, 0.0}, 1.0, p)));
    }
    return {pde < 1e-10 && zero == 0.0 && forced > 1e-3,
            "pde max " + fmt(pde) + " (tol 1e-10); forcing Gamma=0 " + fmt(zero) + ", Gamma=1 " + fmt(forced)};
}

Outcome classification()
{
    const std::pair<double, FlowKind> cases[] = {{-1.0, FlowKind::shrinking},
                                                 {-0.3, FlowKind::shrinking},
                                                 {0.0, FlowKind::steady},
                                                 {0.5, FlowKind::expanding},
                                                 {2.0, FlowKind::expanding}};
    std::string labels;
    bool ok = true;
    for (auto [beta, want] : cases) {
        const FlowKind got = classify(beta);
        ok = ok && got == want;
        labels += (labels.empty() ? "" : ", ") + to_string(got);
    }
    return {ok, labels};
}

bool schema_valid(const json& j)
{
    if (!j.is_object() || !j.contains("config") || !j["config"].is_object()) return false;
    if (!j.contains("checks") || !j["checks"].is_array()) return false;
    if (!j.contains("verdict") || !j["verdict"].is_string()) return false;
    if (!j.contains("version") || !j["version"].is_string()) return false;
    if (!j.contains("wall_time_s") || !j["wall_time_s"].is_number()) return false;
    for (const auto& c : j["checks"]) {
        if (!c.is_object()) return false;
        for (const char* key : {"name", "worst_component", "verdict", "detail"})
            if (!c.contains(key) || !c[key].is_string()) return false;
        for (const char* key : {"max", "rms", "tolerance"})
            if (!c.contains(key) || !c[key].is_number()) return false;
        if (!c.contains("gating") || !c["gating"].is_boolean()) return false;
        const json& wp = c["worst_point"];
        if (!(wp.is_null() || (wp.is_array() && wp.size() == 4))) return false;
    }
    return true;
}

int run_cli(const std::string& cli, const std::string& args, const std::filesystem::path& out)
{
    const std::string cmd = "\"" + cli + "\" " + args + " --out \"" + out.string() + "\" > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

json load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    return json::parse(in, nullptr, false);
}

Outcome cli_contract(const std::string& cli, const std::filesystem::path& dir)
{
    if (cli.empty()) return {false, "no CLI path given"};
    const auto a = dir / "acceptance_report_a.json";
    const auto b = dir / "acceptance_report_b.json";
    const auto f = dir / "acceptance_report_fail.json";
    const int ca = run_cli(cli, "report-all", a);
    const int cb = run_cli(cli, "report-all", b);
    const int cf = run_cli(cli, "soliton-verify --mass const:1", f);

    json ja = load(a), jb = load(b);
    const bool valid = schema_valid(ja) && schema_valid(jb);
    bool same = false;
    if (valid) {
        ja.erase("wall_time_s");
        jb.erase("wall_time_s");
        same = ja == jb;
    }
    const bool ok = ca == 0 && cb == 0 && valid && same && cf == 1;
    return {ok, "report-all exit " + std::to_string(ca) + "/" + std::to_string(cb) + ", schema "
                    + (valid ? "valid" : "invalid") + ", deterministic " + (same ? "yes" : "no")
                    + "; soliton-verify const:1 exit " + std::to_string(cf)};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::filesystem::path dir = std::filesystem::current_path();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"ricci closed form", ricci_closed_form},
        {"scalar curvature", scalar_curvature},
        {"riemann symmetries", [&] { return riemann_symmetries(dir / "riemann_oracle_report.json"); }},
        {"lie derivative equivalence", lie_equivalence},
        {"solved-solution certificate", solved_certificate},
        {"nonexistence probe", nonexistence_probe_criterion},
        {"potential verification", potential_verification},
        {"separation family", separation_family},
        {"classification", classification},
        {"cli contract", [&] { return cli_contract(cli, dir); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  "
                  << o.summary << '\n';
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
