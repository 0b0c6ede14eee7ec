#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vaidya/errors.hpp"
#include "vaidya/report.hpp"

namespace {

constexpr int kUsage = 2;

std::string command_list()
{
    std::string out;
    for (auto c : vaidya::kCommands) out += (out.empty() ? "" : ", ") + std::string(c);
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    vaidya::RunConfig cfg;
    std::string format = "json";
    std::string convention = "g2";
    std::vector<std::string> tolerances;
    std::string out;

    CLI::App app{"Residual verification for conformal Ricci-Bourguignon solitons on the Vaidya metric"};
    app.set_version_flag("--version", std::string(vaidya::kVersion));
    app.add_option("command", cfg.command, "one of: " + command_list())->required();
    app.add_option("--mass", cfg.masses, "mass function: zero | const:v | linear:a,b | poly:c0,... | sinoff:amp,off");
    app.add_option("--beta", cfg.beta, "soliton beta");
    app.add_option("--p", cfg.p, "conformal pressure");
    app.add_option("--alpha", cfg.alpha, "scalar curvature coefficient");
    app.add_option("--kappa", cfg.kappa, "kappa = 2 beta - (p + 1/2), given directly");
    app.add_option("--Psi", cfg.Psi, "solved-solution constant Psi");
    app.add_option("--psi3", cfg.psi3, "solved-solution constant psi3");
    app.add_option("--Psi2", cfg.Psi2, "potential constant Psi2");
    app.add_option("--Gamma", cfg.Gamma, "separation constant (>= 0)");
    app.add_option("--psi1", cfg.psi1, "separation coefficient psi1");
    app.add_option("--psi2", cfg.psi2, "separation coefficient psi2");
    app.add_option("--grid", cfg.grid, "u:a,b,n;r:a,b,n;theta:a,b,n;phi:a,b,n");
    app.add_option("--basis", cfg.basis, "minimal | extended");
    app.add_option("--tol", tolerances, "name=value (identity, fd, probe_floor, probe_ratio)");
    app.add_option("--format", format, "json | csv | text")->capture_default_str();
    app.add_option("--out", out, "output path (stdout when omitted)");
    app.add_option("--convention", convention, "potential convention: r5 | g2")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    vaidya::ResidualReport report;
    try {
        for (const auto& t : tolerances) cfg.tol.apply(t);
        cfg.format = vaidya::parse_format(format);
        if (convention == "g2")
            cfg.convention = vaidya::PotentialConvention::g2_consistent;
        else if (convention == "r5")
            cfg.convention = vaidya::PotentialConvention::as_printed_r5;
        else
            throw vaidya::InvalidInput("unknown convention '" + convention + "' (r5 | g2)");
        if (!out.empty()) cfg.out = out;
        report = vaidya::run(cfg);
    } catch (const vaidya::InvalidInput& e) {
        std::cerr << "vaidya: " << e.what() << '\n';
        return kUsage;
    } catch (const vaidya::Error& e) {
        std::cerr << "vaidya: evaluation failed: " << e.what() << '\n';
        return 1;
    }

    try {
        vaidya::emit(report, cfg.format, cfg.out, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "vaidya: " << e.what() << '\n';
        return kUsage;
    }
    return vaidya::exit_status(report);
}
