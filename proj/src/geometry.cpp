#include "vaidya/geometry.hpp"

#include <cmath>
#include <utility>

#include "vaidya/errors.hpp"

namespace vaidya {

Eigen::Matrix4d JetMatrix::values() const
{
    Eigen::Matrix4d m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = (*this)(i, j).value();
    return m;
}

Eigen::Matrix4d JetMatrix::partial(std::size_t k) const
{
    Eigen::Matrix4d m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = (*this)(i, j).grad(k);
    return m;
}

Eigen::Matrix4d JetMatrix::second_partial(std::size_t k, std::size_t l) const
{
    Eigen::Matrix4d m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = (*this)(i, j).hess(k, l);
    return m;
}

Metric4::Metric4(std::array<ScalarField, Sym4::kSize> upper) : entries_(std::move(upper))
{
    for (const auto& f : entries_)
        if (!f) throw InvalidInput("metric entries must be callable fields");
}

JetMatrix Metric4::evaluate(const Point4& p) const
{
    JetMatrix out;
    for (auto [i, j] : kUpperPairs) out(i, j) = vaidya::evaluate(entry(i, j), p);
    return out;
}

Metric4 vaidya_metric(const MassFunction& m)
{
    std::array<ScalarField, Sym4::kSize> e;
    for (auto& f : e) f = const_field(0.0);
    e[Sym4::slot(0, 0)] = [m](const Point4& p) {
        const Jet2 r = jet_coord(Coord::r, p);
        return 2.0 * m.jet(p) / r - 1.0;
    };
    e[Sym4::slot(0, 1)] = const_field(-1.0);
    e[Sym4::slot(2, 2)] = [](const Point4& p) { return pow_int(jet_coord(Coord::r, p), 2); };
    e[Sym4::slot(3, 3)] = [](const Point4& p) {
        const Jet2 r = jet_coord(Coord::r, p);
        const Jet2 s = sin(jet_coord(Coord::theta, p));
        return r * r * s * s;
    };
    return Metric4(std::move(e));
}

Metric4 constant_metric(const Eigen::Matrix4d& values)
{
    std::array<ScalarField, Sym4::kSize> e;
    for (auto [i, j] : kUpperPairs) e[Sym4::slot(i, j)] = const_field(values(i, j));
    return Metric4(std::move(e));
}

Eigen::Matrix4d invert_values(const Eigen::Matrix4d& g)
{
    Eigen::Matrix4d a = g;
    Eigen::Matrix4d inv = Eigen::Matrix4d::Identity();
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 4; ++row)
            if (std::abs(a(row, col)) > std::abs(a(pivot, col))) pivot = row;
        if (a(pivot, col) == 0.0) throw DegenerateMetric("metric is singular");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
            det = -det;
        }
        const double d = a(col, col);
        det *= d;
        a.row(col) /= d;
        inv.row(col) /= d;
        for (int row = 0; row < 4; ++row) {
            if (row == col) continue;
            const double f = a(row, col);
            if (f == 0.0) continue;
            a.row(row) -= f * a.row(col);
            inv.row(row) -= f * inv.row(col);
        }
    }
    if (!(std::abs(det) > 1e-12)) throw DegenerateMetric("metric determinant below 1e-12");
    return inv;
}

JetMatrix inverse_metric(const JetMatrix& g)
{
    const Eigen::Matrix4d inv = invert_values(g.values());
    std::array<Eigen::Matrix4d, 4> dg;
    std::array<Eigen::Matrix4d, 4> dinv;
    for (std::size_t k = 0; k < 4; ++k) {
        dg[k] = g.partial(k);
        dinv[k] = -inv * dg[k] * inv;
    }
    std::array<Eigen::Matrix4d, Sym4::kSize> ddinv;
    for (auto [k, l] : kUpperPairs) {
        ddinv[Sym4::slot(k, l)] = inv * dg[k] * inv * dg[l] * inv + inv * dg[l] * inv * dg[k] * inv
                                  - inv * g.second_partial(k, l) * inv;
    }

    JetMatrix out;
    for (auto [i, j] : kUpperPairs) {
        Vec4 grad;
        for (std::size_t k = 0; k < 4; ++k) grad[k] = dinv[k](i, j);
        Sym4 hess = Sym4::generate([&](std::size_t k, std::size_t l) { return ddinv[Sym4::slot(k, l)](i, j); });
        out(i, j) = Jet2(inv(i, j), grad, hess);
    }
    return out;
}

JetMatrix inverse_metric(const Metric4& g, const Point4& p)
{
    try {
        return inverse_metric(g.evaluate(p));
    } catch (const DegenerateMetric& e) {
        throw DegenerateMetric(std::string(e.what()) + " at " + to_string(p));
    }
}

Eigen::Matrix4d vaidya_inverse_closed_form(const MassFunction& m, const Point4& p)
{
    const double r = p.r;
    const double s = std::sin(p.theta);
    Eigen::Matrix4d inv = Eigen::Matrix4d::Zero();
    inv(0, 1) = inv(1, 0) = -1.0;
    inv(1, 1) = 1.0 - 2.0 * m.at(p.u).m / r;
    inv(2, 2) = 1.0 / (r * r);
    inv(3, 3) = 1.0 / (r * r * s * s);
    return inv;
}

CurvatureBundle curvature(const JetMatrix& g)
{
    CurvatureBundle b;
    b.metric = g.values();
    b.inverse = invert_values(b.metric);

    std::array<Eigen::Matrix4d, 4> dg;
    std::array<Eigen::Matrix4d, 4> dinv;
    for (std::size_t k = 0; k < 4; ++k) {
        dg[k] = g.partial(k);
        dinv[k] = -b.inverse * dg[k] * b.inverse;
    }

    // Christoffel symbols of the first kind and their partials.
    Rank3 lower{};
    Rank4 lower_partial{};
    for (std::size_t d = 0; d < 4; ++d)
        for (std::size_t bb = 0; bb < 4; ++bb)
            for (std::size_t c = 0; c < 4; ++c) {
                lower[d][bb][c] = 0.5 * (dg[bb](d, c) + dg[c](d, bb) - dg[d](bb, c));
                for (std::size_t e = 0; e < 4; ++e)
                    lower_partial[d][bb][c][e] =
                        0.5 * (g(d, c).hess(e, bb) + g(d, bb).hess(e, c) - g(bb, c).hess(e, d));
            }

    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t bb = 0; bb < 4; ++bb)
            for (std::size_t c = 0; c < 4; ++c) {
                double v = 0.0;
                for (std::size_t d = 0; d < 4; ++d) v += b.inverse(a, d) * lower[d][bb][c];
                b.christoffel[a][bb][c] = v;
                for (std::size_t e = 0; e < 4; ++e) {
                    double dv = 0.0;
                    for (std::size_t d = 0; d < 4; ++d)
                        dv += dinv[e](a, d) * lower[d][bb][c] + b.inverse(a, d) * lower_partial[d][bb][c][e];
                    b.christoffel_partial[a][bb][c][e] = dv;
                }
            }

    const auto& G = b.christoffel;
    const auto& dG = b.christoffel_partial;
    Rank4 up{};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t bb = 0; bb < 4; ++bb)
            for (std::size_t c = 0; c < 4; ++c)
                for (std::size_t d = 0; d < 4; ++d) {
                    double v = dG[a][d][bb][c] - dG[a][c][bb][d];
                    for (std::size_t e = 0; e < 4; ++e) v += G[a][c][e] * G[e][d][bb] - G[a][d][e] * G[e][c][bb];
                    up[a][bb][c][d] = kRiemannSign * v;
                }

    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t bb = 0; bb < 4; ++bb)
            for (std::size_t c = 0; c < 4; ++c)
                for (std::size_t d = 0; d < 4; ++d) {
                    double v = 0.0;
                    for (std::size_t e = 0; e < 4; ++e) v += b.metric(a, e) * up[e][bb][c][d];
                    b.riemann[a][bb][c][d] = v;
                }

    b.ricci.setZero();
    for (std::size_t bb = 0; bb < 4; ++bb)
        for (std::size_t d = 0; d < 4; ++d)
            for (std::size_t a = 0; a < 4; ++a) b.ricci(bb, d) += up[a][bb][a][d];
    b.scalar = (b.inverse.array() * b.ricci.array()).sum();
    return b;
}

CurvatureBundle curvature(const Metric4& g, const Point4& p)
{
    require_in_domain(p);
    try {
        return curvature(g.evaluate(p));
    } catch (const DegenerateMetric& e) {
        throw DegenerateMetric(std::string(e.what()) + " at " + to_string(p));
    }
}

Sym4 closed_form_ricci(const MassFunction& m, const Point4& p)
{
    Sym4 s;
    s(0, 0) = 2.0 * m.at(p.u).dm / (p.r * p.r);
    return s;
}

RiemannComparison compare_riemann_oracle(const MassFunction& mass, const Point4& p, double sign)
{
    if (sign != 1.0 && sign != -1.0) throw InvalidInput("compare_riemann_oracle: sign must be +1 or -1");
    const CurvatureBundle b = curvature(vaidya_metric(mass), p);
    const MassValue mv = mass.at(p.u);
    const double m = mv.m;
    const double dm = mv.dm;
    const double r = p.r;
    const double s2 = std::sin(p.theta) * std::sin(p.theta);

    struct Listed {
        const char* label;
        std::array<std::size_t, 4> idx;
        double value;
    };
    const Listed listed[] = {
        {"R_1212", {0, 1, 0, 1}, -2.0 * m / (r * r * r)},
        {"R_1313", {0, 2, 0, 2}, (-2.0 * m + r * r * dm - m) / (r * r)},
        {"R_1323", {0, 2, 1, 2}, m / r},
        {"R_1424", {0, 3, 1, 3}, m * s2 / r},
        {"R_1414", {0, 3, 0, 3}, -(2.0 * m * m - m * r + r * r * dm) * s2 / (r * r)},
        {"R_3434", {2, 3, 2, 3}, 2.0 * m * r * s2},
    };

    auto numeric = [&](const Listed& l) { return b.riemann[l.idx[0]][l.idx[1]][l.idx[2]][l.idx[3]]; };

    RiemannComparison out;
    out.sign = sign;
    constexpr double kMatch = 1e-9;
    int mismatches_plus = 0;
    int mismatches_minus = 0;
    for (const auto& l : listed) {
        RiemannListEntry e;
        e.label = l.label;
        e.index = l.idx;
        e.listed = l.value;
        e.numeric = numeric(l);
        e.difference_plus = std::abs(e.numeric - e.listed);
        e.difference_minus = std::abs(-e.numeric - e.listed);
        e.difference = sign > 0 ? e.difference_plus : e.difference_minus;
        mismatches_plus += e.difference_plus > kMatch;
        mismatches_minus += e.difference_minus > kMatch;
        out.max_difference = std::max(out.max_difference, e.difference);
        out.entries.push_back(e);
    }
    if (mismatches_plus != mismatches_minus) out.best_sign = mismatches_plus < mismatches_minus ? 1.0 : -1.0;
    return out;
}

}  // namespace vaidya
