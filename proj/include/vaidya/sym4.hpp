#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace vaidya {

/// Symmetric 4x4 matrix stored as its upper triangle, so (i,j) and (j,i)
/// alias the same slot.
class Sym4 {
public:
    static constexpr std::size_t kSize = 10;

    constexpr Sym4() = default;

    template <typename Fn>
    static Sym4 generate(Fn&& fn)
    {
        Sym4 s;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) s(i, j) = fn(i, j);
        return s;
    }

    static constexpr std::size_t slot(std::size_t i, std::size_t j) noexcept
    {
        if (i > j) std::swap(i, j);
        return i * 4 - i * (i + 1) / 2 + j;
    }

    constexpr double operator()(std::size_t i, std::size_t j) const noexcept { return data_[slot(i, j)]; }
    constexpr double& operator()(std::size_t i, std::size_t j) noexcept { return data_[slot(i, j)]; }

    const std::array<double, kSize>& upper() const noexcept { return data_; }

    double max_abs() const noexcept
    {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    Sym4& operator+=(const Sym4& o) noexcept
    {
        for (std::size_t k = 0; k < kSize; ++k) data_[k] += o.data_[k];
        return *this;
    }
    Sym4& operator-=(const Sym4& o) noexcept
    {
        for (std::size_t k = 0; k < kSize; ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Sym4& operator*=(double c) noexcept
    {
        for (double& v : data_) v *= c;
        return *this;
    }

    friend Sym4 operator+(Sym4 a, const Sym4& b) noexcept { return a += b; }
    friend Sym4 operator-(Sym4 a, const Sym4& b) noexcept { return a -= b; }
    friend Sym4 operator*(Sym4 a, double c) noexcept { return a *= c; }
    friend Sym4 operator*(double c, Sym4 a) noexcept { return a *= c; }

    bool operator==(const Sym4&) const = default;

private:
    std::array<double, kSize> data_{};
};

/// The ten (i <= j) index pairs in row-major order: (0,0),(0,1),...,(3,3).
inline constexpr std::array<std::array<std::size_t, 2>, 10> kUpperPairs{{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

}  // namespace vaidya
