#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "vaidya/soliton.hpp"

namespace vaidya {

struct GridRange {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 1;

    /// Evenly spaced, endpoints included; a single sample sits at lo.
    std::vector<double> values() const;
};

/// Tensor-product sample grid over (u, r, theta, phi).
struct SampleGrid {
    GridRange u{0.0, 2.0, 4};
    GridRange r{1.0, 4.0, 4};
    GridRange theta{0.7853981633974483, 2.356194490192345, 3};
    GridRange phi{0.0, 4.71238898038469, 3};

    /// "u:a,b,n;r:a,b,n;theta:a,b,n;phi:a,b,n"; omitted axes keep their defaults.
    static SampleGrid parse(std::string_view text);
    std::string spec() const;

    std::size_t size() const noexcept { return u.count * r.count * theta.count * phi.count; }
    /// Point-major order u, r, theta, phi (phi fastest). Throws InvalidInput if
    /// any point leaves the chart domain.
    std::vector<Point4> points() const;
};

struct BasisField {
    std::string label;
    ScalarField field;
};

/// Per-component basis functions for (A, B, C, D).
struct BasisSpec {
    std::string name;
    std::array<std::vector<BasisField>, 4> components;

    /// A: [1, u], B: [r], C: [], D: [1]; spans the closed-form soliton field.
    static BasisSpec minimal();
    /// minimal plus A: [r, sin u, cos u], B: [1, u], C: [sin th, cos th cos ph, cos th sin ph],
    /// D: [cos th cos ph, cos th sin ph].
    static BasisSpec extended();
    /// "minimal" | "extended"; throws InvalidInput otherwise.
    static BasisSpec by_name(std::string_view name);

    std::size_t size() const noexcept;
    std::vector<std::string> labels() const;
};

/// Smallest singular value of the column-normalized matrix of basis values
/// sampled on the grid (one row per point and component).
double basis_independence(const BasisSpec& basis, const SampleGrid& grid);

struct LinearSystem {
    Eigen::MatrixXd design;
    Eigen::VectorXd rhs;
    std::vector<std::string> column_labels;
    std::string grid_id;
    std::string basis_id;
};

/// Ten rows (upper-triangle residual components, row-major) per grid point,
/// one column per basis field; rhs = -(2S - kappa g - 2 alpha R g).
LinearSystem assemble_design(const BasisSpec& basis, const SampleGrid& grid, const MassFunction& m,
                             const SolitonParams& params);

struct FitResult {
    std::vector<double> coefficients;
    std::vector<std::string> labels;
    double rms = 0.0;
    double max = 0.0;
    double condition = 0.0;
    std::size_t rank = 0;
    std::string grid_id;
    std::string basis_id;
};

/// Column-normalized Householder QR with column pivoting. Columns beyond the
/// numerical rank get zero coefficients. Throws UnderdeterminedSystem when
/// rows < columns.
FitResult solve_least_squares(const LinearSystem& system, double rank_tolerance = 1e-10);

struct ProbeEntry {
    std::string mass;
    bool zero_mass = false;
    FitResult fit;
};

struct ProbeReport {
    std::vector<ProbeEntry> entries;
    double zero_floor = 0.0;
    double baseline_threshold = 1e-8;
    double separation_ratio = 1e3;
    bool pass = false;
};

/// Residual floors per mass; pass when the zero-mass floor is below the
/// baseline threshold and every other floor exceeds ratio * zero floor.
/// Throws InvalidInput when no zero mass is listed.
ProbeReport nonexistence_probe(const std::vector<MassFunction>& masses, const BasisSpec& basis,
                               const SampleGrid& grid, const SolitonParams& params,
                               double baseline_threshold = 1e-8, double separation_ratio = 1e3);

}  // namespace vaidya
