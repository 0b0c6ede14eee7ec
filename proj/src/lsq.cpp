#include "vaidya/lsq.hpp"

#include <charconv>
#include <cmath>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "vaidya/errors.hpp"

namespace vaidya {

std::vector<double> GridRange::values() const
{
    std::vector<double> v;
    v.reserve(count);
    if (count == 1) {
        v.push_back(lo);
        return v;
    }
    for (std::size_t i = 0; i < count; ++i)
        v.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return v;
}

namespace {

GridRange parse_range(std::string_view axis, std::string_view body, std::string_view full)
{
    auto fail = [&]() -> GridRange {
        throw InvalidInput("malformed grid spec '" + std::string(full) + "' near axis '" + std::string(axis) + "'");
    };
    std::array<std::string_view, 3> parts;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto comma = body.find(',');
        if ((i < 2) == (comma == std::string_view::npos)) return fail();
        parts[i] = body.substr(0, comma);
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    }
    GridRange g;
    auto num = [&](std::string_view s, double& out) {
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(out)) fail();
    };
    num(parts[0], g.lo);
    num(parts[1], g.hi);
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), g.count);
    if (parts[2].empty() || ec != std::errc{} || ptr != parts[2].data() + parts[2].size() || g.count == 0) fail();
    return g;
}

std::string range_spec(const GridRange& g)
{
    return format_double(g.lo) + "," + format_double(g.hi) + "," + std::to_string(g.count);
}

}  // namespace

SampleGrid SampleGrid::parse(std::string_view text)
{
    SampleGrid grid;
    while (!text.empty()) {
        const auto semi = text.find(';');
        const std::string_view item = text.substr(0, semi);
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw InvalidInput("malformed grid spec item '" + std::string(item) + "'");
        const std::string_view axis = item.substr(0, colon);
        const GridRange range = parse_range(axis, item.substr(colon + 1), item);
        if (axis == "u")
            grid.u = range;
        else if (axis == "r")
            grid.r = range;
        else if (axis == "theta")
            grid.theta = range;
        else if (axis == "phi")
            grid.phi = range;
        else
            throw InvalidInput("unknown grid axis '" + std::string(axis) + "'");
    }
    grid.points();  // validates the domain
    return grid;
}

std::string SampleGrid::spec() const
{
    return "u:" + range_spec(u) + ";r:" + range_spec(r) + ";theta:" + range_spec(theta) + ";phi:" + range_spec(phi);
}

std::vector<Point4> SampleGrid::points() const
{
    std::vector<Point4> pts;
    pts.reserve(size());
    for (double uu : u.values())
        for (double rr : r.values())
            for (double th : theta.values())
                for (double ph : phi.values()) {
                    Point4 p{uu, rr, th, ph};
                    require_in_domain(p);
                    pts.push_back(p);
                }
    return pts;
}

namespace {

BasisField coord_basis(const char* label, Coord c) { return {label, coord_field(c)}; }

}  // namespace

BasisSpec BasisSpec::minimal()
{
    BasisSpec b;
    b.name = "minimal";
    b.components[0] = {{"A:1", const_field(1.0)}, coord_basis("A:u", Coord::u)};
    b.components[1] = {coord_basis("B:r", Coord::r)};
    b.components[3] = {{"D:1", const_field(1.0)}};
    return b;
}

BasisSpec BasisSpec::extended()
{
    BasisSpec b = minimal();
    b.name = "extended";
    auto& A = b.components[0];
    A.push_back(coord_basis("A:r", Coord::r));
    A.push_back({"A:sin(u)", [](const Point4& p) { return sin(jet_coord(Coord::u, p)); }});
    A.push_back({"A:cos(u)", [](const Point4& p) { return cos(jet_coord(Coord::u, p)); }});

    auto& B = b.components[1];
    B.push_back({"B:1", const_field(1.0)});
    B.push_back(coord_basis("B:u", Coord::u));

    auto& C = b.components[2];
    C.push_back({"C:sin(theta)", [](const Point4& p) { return sin(jet_coord(Coord::theta, p)); }});
    C.push_back({"C:cos(theta)cos(phi)", [](const Point4& p) {
                     return cos(jet_coord(Coord::theta, p)) * cos(jet_coord(Coord::phi, p));
                 }});
    C.push_back({"C:cos(theta)sin(phi)", [](const Point4& p) {
                     return cos(jet_coord(Coord::theta, p)) * sin(jet_coord(Coord::phi, p));
                 }});

    auto& D = b.components[3];
    D.push_back({"D:cos(theta)cos(phi)", [](const Point4& p) {
                     return cos(jet_coord(Coord::theta, p)) * cos(jet_coord(Coord::phi, p));
                 }});
    D.push_back({"D:cos(theta)sin(phi)", [](const Point4& p) {
                     return cos(jet_coord(Coord::theta, p)) * sin(jet_coord(Coord::phi, p));
                 }});
    return b;
}

BasisSpec BasisSpec::by_name(std::string_view name)
{
    if (name == "minimal") return minimal();
    if (name == "extended") return extended();
    throw InvalidInput("unknown basis preset '" + std::string(name) + "'");
}

std::size_t BasisSpec::size() const noexcept
{
    std::size_t n = 0;
    for (const auto& c : components) n += c.size();
    return n;
}

std::vector<std::string> BasisSpec::labels() const
{
    std::vector<std::string> out;
    for (const auto& c : components)
        for (const auto& f : c) out.push_back(f.label);
    return out;
}

double basis_independence(const BasisSpec& basis, const SampleGrid& grid)
{
    const auto pts = grid.points();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(pts.size() * 4),
                                              static_cast<Eigen::Index>(basis.size()));
    Eigen::Index col = 0;
    for (std::size_t k = 0; k < 4; ++k)
        for (const auto& bf : basis.components[k]) {
            for (std::size_t n = 0; n < pts.size(); ++n)
                M(static_cast<Eigen::Index>(n * 4 + k), col) = evaluate(bf.field, pts[n]).value();
            const double norm = M.col(col).norm();
            if (norm > 0.0) M.col(col) /= norm;
            ++col;
        }
    if (M.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    return svd.singularValues().minCoeff();
}

LinearSystem assemble_design(const BasisSpec& basis, const SampleGrid& grid, const MassFunction& m,
                             const SolitonParams& params)
{
    if (basis.size() == 0) throw InvalidInput("assemble_design: empty basis");
    const auto pts = grid.points();
    if (pts.empty()) throw InvalidInput("assemble_design: empty grid");

    const Metric4 g = vaidya_metric(m);
    LinearSystem sys;
    sys.design.setZero(static_cast<Eigen::Index>(pts.size() * 10), static_cast<Eigen::Index>(basis.size()));
    sys.rhs.setZero(sys.design.rows());
    sys.column_labels = basis.labels();
    sys.grid_id = grid.spec();
    sys.basis_id = basis.name;

    for (std::size_t n = 0; n < pts.size(); ++n) {
        const JetMatrix gj = g.evaluate(pts[n]);
        const CurvatureBundle curv = curvature(gj);
        const auto row0 = static_cast<Eigen::Index>(n * 10);
        const double conformal = params.kappa + 2.0 * params.alpha * curv.scalar;
        for (std::size_t q = 0; q < 10; ++q) {
            const auto [i, j] = kUpperPairs[q];
            const double ric = 0.5 * (curv.ricci(i, j) + curv.ricci(j, i));
            sys.rhs(row0 + static_cast<Eigen::Index>(q)) = -(2.0 * ric - conformal * curv.metric(i, j));
        }
        Eigen::Index col = 0;
        for (std::size_t k = 0; k < 4; ++k)
            for (const auto& bf : basis.components[k]) {
                std::array<Jet2, 4> x{};
                x[k] = evaluate(bf.field, pts[n]);
                const Sym4 lie = lie_derivative(gj, x);
                for (std::size_t q = 0; q < 10; ++q)
                    sys.design(row0 + static_cast<Eigen::Index>(q), col) = lie.upper()[q];
                ++col;
            }
    }
    return sys;
}

FitResult solve_least_squares(const LinearSystem& system, double rank_tolerance)
{
    const Eigen::MatrixXd& A = system.design;
    const Eigen::Index rows = A.rows();
    const Eigen::Index cols = A.cols();
    if (rows < cols) throw UnderdeterminedSystem("least squares needs rows >= columns");
    if (system.rhs.size() != rows) throw InvalidInput("least squares: rhs size does not match design rows");

    Eigen::VectorXd norms = A.colwise().norm().transpose();
    Eigen::MatrixXd scaled = A;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (norms(c) > 0.0) scaled.col(c) /= norms(c);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
    const Eigen::MatrixXd& packed = qr.matrixQR();
    const Eigen::Index diag = std::min(rows, cols);
    const double lead = diag > 0 ? std::abs(packed(0, 0)) : 0.0;
    Eigen::Index rank = 0;
    while (rank < diag && lead > 0.0 && std::abs(packed(rank, rank)) > rank_tolerance * lead) ++rank;

    const Eigen::VectorXd qtb = qr.householderQ().transpose() * system.rhs;
    Eigen::VectorXd z = Eigen::VectorXd::Zero(cols);
    if (rank > 0)
        z.head(rank) =
            packed.topLeftCorner(rank, rank).triangularView<Eigen::Upper>().solve(qtb.head(rank));
    const Eigen::VectorXd y = qr.colsPermutation() * z;

    FitResult fit;
    fit.labels = system.column_labels;
    fit.grid_id = system.grid_id;
    fit.basis_id = system.basis_id;
    fit.rank = static_cast<std::size_t>(rank);
    fit.condition = rank > 0 ? lead / std::abs(packed(rank - 1, rank - 1)) : 0.0;
    Eigen::VectorXd x(cols);
    for (Eigen::Index c = 0; c < cols; ++c) x(c) = norms(c) > 0.0 ? y(c) / norms(c) : 0.0;
    fit.coefficients.assign(x.data(), x.data() + cols);

    const Eigen::VectorXd residual = A * x - system.rhs;
    fit.max = rows > 0 ? residual.cwiseAbs().maxCoeff() : 0.0;
    fit.rms = rows > 0 ? std::sqrt(residual.squaredNorm() / static_cast<double>(rows)) : 0.0;
    return fit;
}

ProbeReport nonexistence_probe(const std::vector<MassFunction>& masses, const BasisSpec& basis,
                               const SampleGrid& grid, const SolitonParams& params, double baseline_threshold,
                               double separation_ratio)
{
    bool has_zero = false;
    for (const auto& m : masses) has_zero = has_zero || m.is_identically_zero();
    if (!has_zero) throw InvalidInput("nonexistence probe needs the zero mass as a baseline");

    ProbeReport report;
    report.baseline_threshold = baseline_threshold;
    report.separation_ratio = separation_ratio;
    for (const auto& m : masses) {
        ProbeEntry e;
        e.mass = m.spec();
        e.zero_mass = m.is_identically_zero();
        e.fit = solve_least_squares(assemble_design(basis, grid, m, params));
        if (e.zero_mass) report.zero_floor = std::max(report.zero_floor, e.fit.rms);
        report.entries.push_back(std::move(e));
    }
    report.pass = report.zero_floor < baseline_threshold;
    for (const auto& e : report.entries)
        if (!e.zero_mass && !(e.fit.rms > separation_ratio * report.zero_floor)) report.pass = false;
    return report;
}

}  // namespace vaidya
