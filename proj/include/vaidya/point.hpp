#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace vaidya {

/// Chart coordinates in the order (u, r, theta, phi). Reports print these as
/// 1-based indices 1..4.
enum class Coord : std::size_t { u = 0, r = 1, theta = 2, phi = 3 };

inline constexpr std::size_t kDim = 4;

constexpr std::size_t index(Coord c) noexcept { return static_cast<std::size_t>(c); }

struct Point4 {
    double u = 0.0;
    double r = 1.0;
    double theta = 1.5707963267948966;
    double phi = 0.0;

    double operator[](std::size_t i) const noexcept
    {
        switch (i) {
        case 0: return u;
        case 1: return r;
        case 2: return theta;
        default: return phi;
        }
    }
    double operator[](Coord c) const noexcept { return (*this)[index(c)]; }

    std::array<double, 4> as_array() const noexcept { return {u, r, theta, phi}; }

    bool operator==(const Point4&) const = default;
};

struct DomainLimits {
    double r_min = 1e-3;
    double theta_min = 1e-3;
};

bool in_domain(const Point4& p, const DomainLimits& limits = {}) noexcept;

/// Throws InvalidInput when p violates the chart guards.
void require_in_domain(const Point4& p, const DomainLimits& limits = {});

std::string to_string(const Point4& p);

}  // namespace vaidya
