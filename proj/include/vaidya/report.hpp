#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "vaidya/lsq.hpp"

namespace vaidya {

inline constexpr std::string_view kVersion = "0.1.0";

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(std::string_view text);
std::string to_string(OutputFormat f);

struct Tolerances {
    double identity = 1e-9;      ///< curvature and soliton identities (absolute)
    double fd = 1e-6;            ///< finite-difference cross-checks (relative)
    double probe_floor = 1e-8;   ///< zero-mass residual floor
    double probe_ratio = 1e3;    ///< required separation of nonzero-mass floors

    /// "name=value"; throws InvalidInput for unknown names or bad numbers.
    void apply(std::string_view assignment);
};

/// Parsed command-line configuration for one run.
struct RunConfig {
    std::string command;
    std::vector<std::string> masses;
    std::optional<double> beta;
    std::optional<double> p;
    std::optional<double> kappa;
    double alpha = 0.0;
    double Psi = 0.0;
    double psi3 = 0.0;
    double Psi2 = 0.0;
    double Gamma = 1.0;
    double psi1 = 1.0;
    double psi2 = 0.0;
    std::optional<std::string> grid;
    std::optional<std::string> basis;
    Tolerances tol;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> out;
    PotentialConvention convention = PotentialConvention::g2_consistent;

    /// Resolves (beta, p) or kappa. Defaults to beta = 1, p = 0.5 when neither is
    /// given. Throws InvalidInput when the pair is incomplete or inconsistent
    /// with kappa beyond 1e-12.
    SolitonParams params() const;
};

inline constexpr std::string_view kCommands[] = {
    "curvature", "lie", "soliton-verify", "potential-verify", "classify", "fit-probe", "separation-verify",
    "report-all",
};

struct Check {
    std::string name;
    double max = 0.0;
    double rms = 0.0;
    std::optional<Point4> worst_point;
    std::string worst_component;
    double tolerance = 0.0;
    bool pass = true;
    /// Non-gating checks document findings and do not affect the overall verdict.
    bool gating = true;
    std::string detail;
};

struct ResidualReport {
    std::string config_json;  ///< serialized echo of the run configuration
    std::vector<Check> checks;
    std::string version{kVersion};
    double wall_time_s = 0.0;

    bool pass() const noexcept;
};

/// Runs the configured command. Throws InvalidInput for usage errors.
ResidualReport run(const RunConfig& config);

/// 0 when every gating check passes, 1 otherwise.
int exit_status(const ResidualReport& report) noexcept;

std::string to_json(const ResidualReport& report);
std::string to_csv(const ResidualReport& report);
std::string to_text(const ResidualReport& report);

/// Writes the report in the given format to path (stdout when empty) and
/// returns the number of bytes written. Throws std::runtime_error on I/O failure.
std::size_t emit(const ResidualReport& report, OutputFormat format, const std::optional<std::string>& path,
                 std::ostream& stdout_stream);

}  // namespace vaidya
