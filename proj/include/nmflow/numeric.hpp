// numeric.hpp — small grid utilities: prefix integration and interpolation

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace nmflow::numeric {

inline std::vector<double> uniform_grid(double t_max, std::size_t n_samples) {
    if (n_samples < 2 || !(t_max > 0.0))
        throw std::invalid_argument("uniform_grid: need n_samples >= 2 and t_max > 0");
    std::vector<double> t(n_samples);
    const double dt = t_max / static_cast<double>(n_samples - 1);
    for (std::size_t i = 0; i < n_samples; ++i)
        t[i] = dt * static_cast<double>(i);
    t.back() = t_max;
    return t;
}

// Cumulative trapezoid on a uniform grid, I[0] = 0.
inline std::vector<double> cumulative_trapezoid(std::span<const double> y, double dt) {
    std::vector<double> I(y.size(), 0.0);
    for (std::size_t j = 1; j < y.size(); ++j)
        I[j] = I[j - 1] + 0.5 * dt * (y[j - 1] + y[j]);
    return I;
}

// Cumulative Simpson on a uniform grid (4th order). Even indices use composite
// Simpson over sample pairs; odd indices add the integral of the local
// quadratic through the enclosing triple.
inline std::vector<double> cumulative_simpson(std::span<const double> y, double dt) {
    const std::size_t n = y.size();
    std::vector<double> I(n, 0.0);
    if (n < 2)
        return I;
    if (n == 2) {
        I[1] = 0.5 * dt * (y[0] + y[1]);
        return I;
    }
    for (std::size_t j = 2; j < n; j += 2)
        I[j] = I[j - 2] + dt / 3.0 * (y[j - 2] + 4.0 * y[j - 1] + y[j]);
    for (std::size_t j = 1; j < n; j += 2) {
        if (j + 1 < n)
            I[j] = I[j - 1] + dt / 12.0 * (5.0 * y[j - 1] + 8.0 * y[j] - y[j + 1]);
        else
            I[j] = I[j - 1] + dt / 12.0 * (-y[j - 2] + 8.0 * y[j - 1] + 5.0 * y[j]);
    }
    return I;
}

// Catmull-Rom style cubic interpolation of uniformly sampled data.
class CubicInterpolant {
public:
    CubicInterpolant() = default;
    CubicInterpolant(std::vector<double> y, double dt) : y_(std::move(y)), dt_(dt) {
        if (y_.size() < 2 || !(dt_ > 0.0))
            throw std::invalid_argument("CubicInterpolant: need >= 2 samples, dt > 0");
    }

    double operator()(double t) const {
        const double x = t / dt_;
        const auto n = static_cast<std::ptrdiff_t>(y_.size());
        auto j = static_cast<std::ptrdiff_t>(std::floor(x));
        j = std::clamp<std::ptrdiff_t>(j, 0, n - 2);
        const double u = x - static_cast<double>(j);
        const double y1 = y_[static_cast<std::size_t>(j)];
        const double y2 = y_[static_cast<std::size_t>(j + 1)];
        const double m1 = slope(j);
        const double m2 = slope(j + 1);
        const double u2 = u * u, u3 = u2 * u;
        return (2 * u3 - 3 * u2 + 1) * y1 + (u3 - 2 * u2 + u) * m1 +
               (-2 * u3 + 3 * u2) * y2 + (u3 - u2) * m2;
    }

    double max_time() const { return dt_ * static_cast<double>(y_.size() - 1); }

private:
    double slope(std::ptrdiff_t j) const {
        const auto n = static_cast<std::ptrdiff_t>(y_.size());
        if (j <= 0)
            return y_[1] - y_[0];
        if (j >= n - 1)
            return y_[static_cast<std::size_t>(n - 1)] - y_[static_cast<std::size_t>(n - 2)];
        return 0.5 * (y_[static_cast<std::size_t>(j + 1)] - y_[static_cast<std::size_t>(j - 1)]);
    }

    std::vector<double> y_;
    double dt_ = 1.0;
};

} // namespace nmflow::numeric
