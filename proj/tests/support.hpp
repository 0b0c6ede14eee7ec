#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "vaidya/point.hpp"

namespace vaidya::oracle {

inline constexpr double kPi = std::numbers::pi;

/// Uniform in-domain points away from the chart guards.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    Point4 operator()()
    {
        return {uniform(-2.0, 2.0), uniform(1.0, 4.0), uniform(0.4, kPi - 0.4), uniform(0.0, 2.0 * kPi)};
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Point4 shifted(Point4 p, std::size_t k, double h)
{
    switch (k) {
    case 0: p.u += h; break;
    case 1: p.r += h; break;
    case 2: p.theta += h; break;
    default: p.phi += h; break;
    }
    return p;
}

using ScalarFn = std::function<double(const Point4&)>;

inline double fd_first(const ScalarFn& f, const Point4& p, std::size_t k, double h = 1e-5)
{
    return (f(shifted(p, k, h)) - f(shifted(p, k, -h))) / (2.0 * h);
}

inline double fd_second(const ScalarFn& f, const Point4& p, std::size_t k, std::size_t l, double h = 1e-4)
{
    if (k == l) return (f(shifted(p, k, h)) - 2.0 * f(p) + f(shifted(p, k, -h))) / (h * h);
    auto at = [&](double a, double b) { return f(shifted(shifted(p, k, a), l, b)); };
    return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h);
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

/// Plain Vaidya metric values, written out independently of the library.
inline Eigen::Matrix4d vaidya_values(double m, const Point4& p)
{
    const double s = std::sin(p.theta);
    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    g(0, 0) = (2.0 * m - p.r) / p.r;
    g(0, 1) = g(1, 0) = -1.0;
    g(2, 2) = p.r * p.r;
    g(3, 3) = p.r * p.r * s * s;
    return g;
}

}  // namespace vaidya::oracle
