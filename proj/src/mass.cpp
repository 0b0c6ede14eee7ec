#include "vaidya/mass.hpp"

#include <charconv>
#include <cmath>

#include "vaidya/errors.hpp"

namespace vaidya {

namespace {

std::vector<double> parse_list(std::string_view text, std::string_view full)
{
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        double v = 0.0;
        const auto* first = item.data();
        const auto* last = item.data() + item.size();
        if (!item.empty() && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (item.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v))
            throw InvalidInput("malformed mass spec '" + std::string(full) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string join(const std::vector<double>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += format_double(values[i]);
    }
    return s;
}

}  // namespace

std::string format_double(double x)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

MassFunction::MassFunction(Kind kind, std::vector<double> coefficients)
    : kind_(kind), coefficients_(std::move(coefficients))
{
    for (double c : coefficients_)
        if (!std::isfinite(c)) throw InvalidInput("mass function coefficients must be finite");
}

MassFunction MassFunction::zero() { return {Kind::zero, {}}; }
MassFunction MassFunction::constant(double v) { return {Kind::constant, {v}}; }
MassFunction MassFunction::linear(double a, double b) { return {Kind::linear, {a, b}}; }
MassFunction MassFunction::sinusoidal_offset(double amplitude, double offset)
{
    return {Kind::sinusoidal_offset, {amplitude, offset}};
}

MassFunction MassFunction::polynomial(std::vector<double> coefficients)
{
    if (coefficients.empty()) throw InvalidInput("polynomial mass needs at least one coefficient");
    return {Kind::polynomial, std::move(coefficients)};
}

MassFunction MassFunction::parse(std::string_view text)
{
    if (text == "zero") return zero();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InvalidInput("malformed mass spec '" + std::string(text) + "'");
    const std::string_view head = text.substr(0, colon);
    const std::vector<double> args = parse_list(text.substr(colon + 1), text);
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw InvalidInput("mass spec '" + std::string(text) + "' expects " + std::to_string(n) + " value(s)");
    };
    if (head == "const") {
        need(1);
        return constant(args[0]);
    }
    if (head == "linear") {
        need(2);
        return linear(args[0], args[1]);
    }
    if (head == "poly") return polynomial(args);
    if (head == "sinoff") {
        need(2);
        return sinusoidal_offset(args[0], args[1]);
    }
    throw InvalidInput("unknown mass kind '" + std::string(head) + "'");
}

std::string MassFunction::spec() const
{
    switch (kind_) {
    case Kind::zero: return "zero";
    case Kind::constant: return "const:" + join(coefficients_);
    case Kind::linear: return "linear:" + join(coefficients_);
    case Kind::polynomial: return "poly:" + join(coefficients_);
    case Kind::sinusoidal_offset: return "sinoff:" + join(coefficients_);
    }
    return "zero";
}

MassValue MassFunction::at(double u) const noexcept
{
    const auto& c = coefficients_;
    switch (kind_) {
    case Kind::zero: return {};
    case Kind::constant: return {c[0], 0.0, 0.0};
    case Kind::linear: return {c[0] * u + c[1], c[0], 0.0};
    case Kind::sinusoidal_offset: return {c[0] * std::sin(u) + c[1], c[0] * std::cos(u), -c[0] * std::sin(u)};
    case Kind::polynomial: {
        // Horner on m, m', m'' simultaneously.
        MassValue v;
        for (std::size_t k = c.size(); k-- > 0;) {
            v.d2m = v.d2m * u + 2.0 * v.dm;
            v.dm = v.dm * u + v.m;
            v.m = v.m * u + c[k];
        }
        return v;
    }
    }
    return {};
}

Jet2 MassFunction::jet(const Point4& p) const noexcept
{
    const MassValue v = at(p.u);
    return chain(jet_coord(Coord::u, p), v.m, v.dm, v.d2m);
}

ScalarField MassFunction::field() const
{
    return [self = *this](const Point4& p) { return self.jet(p); };
}

bool MassFunction::is_identically_zero() const noexcept
{
    if (kind_ == Kind::zero) return true;
    if (kind_ == Kind::sinusoidal_offset) return coefficients_[0] == 0.0 && coefficients_[1] == 0.0;
    for (double c : coefficients_)
        if (c != 0.0) return false;
    return true;
}

}  // namespace vaidya
