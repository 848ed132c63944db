// spectral.hpp — bath spectral densities, thermal occupation, noise and
// dissipation kernels
//
// Units: hbar = k_B = 1 throughout; frequencies and rates share one unit.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "nmflow/errors.hpp"
#include "nmflow/quad.hpp"

namespace nmflow {

// J(w) = gamma0 lambda^2 / (2 pi [(omega0 - w)^2 + lambda^2]), defined for all
// real w, peaked at the system frequency omega0.
struct Lorentzian {
    double gamma0;  // coupling strength
    double lambda;  // spectral width
    double omega0;  // center
};

// J(w) = pi alpha w^s omega_c^(1-s) exp(-w / omega_c) for w >= 0.
// s < 1 sub-Ohmic, s = 1 Ohmic, s > 1 super-Ohmic.
struct OhmicFamily {
    double alpha;    // dimensionless coupling
    double s;        // Ohmicity exponent, > 0
    double omega_c;  // cutoff frequency
};

using SpectralDensity = std::variant<Lorentzian, OhmicFamily>;

inline void validate(const Lorentzian& sd) {
    if (!(sd.gamma0 > 0.0) || !(sd.lambda > 0.0) || !(sd.omega0 > 0.0))
        throw std::invalid_argument("Lorentzian: gamma0, lambda, omega0 must be > 0");
}

inline void validate(const OhmicFamily& sd) {
    if (!(sd.alpha > 0.0) || !(sd.s > 0.0) || !(sd.omega_c > 0.0))
        throw std::invalid_argument("OhmicFamily: alpha, s, omega_c must be > 0");
}

inline void validate(const SpectralDensity& sd) {
    std::visit([](const auto& v) { validate(v); }, sd);
}

inline double eval_j(const Lorentzian& sd, double omega) {
    const double det = sd.omega0 - omega;
    return sd.gamma0 * sd.lambda * sd.lambda /
           (2.0 * std::numbers::pi * (det * det + sd.lambda * sd.lambda));
}

inline double eval_j(const OhmicFamily& sd, double omega) {
    if (omega < 0.0)
        throw std::domain_error("OhmicFamily spectral density requires omega >= 0");
    return std::numbers::pi * sd.alpha * std::pow(omega, sd.s) *
           std::pow(sd.omega_c, 1.0 - sd.s) * std::exp(-omega / sd.omega_c);
}

inline double eval_j(const SpectralDensity& sd, double omega) {
    return std::visit([omega](const auto& v) { return eval_j(v, omega); }, sd);
}

// Bose-Einstein occupation 1/(exp(omega/T) - 1); exactly 0 at T = 0.
inline double bose_occupation(double temperature, double omega) {
    if (!(omega > 0.0))
        throw std::domain_error("bose_occupation requires omega > 0");
    if (temperature < 0.0)
        throw std::domain_error("bose_occupation requires T >= 0");
    if (temperature == 0.0)
        return 0.0;
    const double x = omega / temperature;
    const double e = std::expm1(x);
    return std::isinf(e) ? 0.0 : 1.0 / e;
}

// coth(omega / 2T) = 1 + 2 n_B(omega); the T = 0 limit is 1.
inline double coth_half(double omega, double temperature) {
    if (temperature == 0.0)
        return 1.0;
    const double e = std::expm1(omega / temperature);
    return std::isinf(e) ? 1.0 : 1.0 + 2.0 / e;
}

namespace detail {

// J(w) coth(w/2T) as a single expression. Below w < 1e-6 T the coth is
// replaced by its Laurent series so the w^(s-1) small-frequency behavior is
// evaluated without overflow or 0 * inf.
inline double j_coth(const OhmicFamily& sd, double temperature, double omega) {
    const double pref = std::numbers::pi * sd.alpha * std::pow(sd.omega_c, 1.0 - sd.s) *
                        std::exp(-omega / sd.omega_c);
    if (temperature > 0.0 && omega < 1e-6 * temperature) {
        // coth(x) ~ 1/x + x/3, x = w/2T
        return pref * (2.0 * temperature * std::pow(omega, sd.s - 1.0) +
                       std::pow(omega, sd.s + 1.0) / (6.0 * temperature));
    }
    return pref * std::pow(omega, sd.s) * coth_half(omega, temperature);
}

inline double j_coth(const Lorentzian& sd, double temperature, double omega) {
    return eval_j(sd, omega) * coth_half(omega, temperature);
}

// Truncation point for the semi-infinite transforms. The exponential cutoff
// makes the Ohmic tail negligible at omega_c * max(50, 10 s); the Lorentzian
// tail only decays like 1/w^2, so the cutoff is tolerance- and
// oscillation-aware.
inline double upper_cutoff(const OhmicFamily& sd, double, double) {
    return sd.omega_c * std::max(50.0, 10.0 * sd.s);
}

inline double upper_cutoff(const Lorentzian& sd, double tau, double eps_abs) {
    const double pref = sd.gamma0 * sd.lambda * sd.lambda / (2.0 * std::numbers::pi);
    const double eps = std::max(eps_abs, 1e-14 * sd.gamma0 * sd.lambda);
    double W = pref / eps;  // plain tail bound, int_W^inf J ~ pref / W
    if (tau > 0.0) {
        // van der Corput: oscillatory tail ~ 4 J(W) / tau
        const double Wosc = std::sqrt(4.0 * pref / (tau * eps));
        W = std::min(W, Wosc);
    }
    return sd.omega0 + std::max(100.0 * sd.lambda, W);
}

template <class SD>
std::vector<double> kernel_edges(const SD& sd, double tau, double eps_abs) {
    double core_end, core_step, first;
    if constexpr (std::is_same_v<SD, OhmicFamily>) {
        core_end = 8.0 * sd.omega_c;
        core_step = sd.omega_c / 8.0;
        first = 1e-8 * sd.omega_c;
    } else {
        core_end = sd.omega0 + 8.0 * sd.lambda;
        core_step = sd.lambda / 8.0;
        first = 1e-8 * sd.lambda;
    }
    auto edges = quad::oscillatory_edges(0.0, upper_cutoff(sd, tau, eps_abs),
                                         std::abs(tau), core_end, core_step);
    quad::grade_left_edge(edges, first);
    return edges;
}

} // namespace detail

// Exact transforms of the Ohmic-family spectral density:
//   d(tau)  = 2 int_0^inf J(w) sin(w tau) dw
//   d1(tau) = 2 int_0^inf J(w) coth(w/2T) cos(w tau) dw
// via Gamma-function moments; the thermal part of d1 sums the Matsubara-like
// series coth = 1 + 2 sum_k exp(-k w / T) with an Euler-Maclaurin tail.
class OhmicKernels {
public:
    OhmicKernels(const OhmicFamily& sd, double temperature)
        : sd_(sd), temperature_(temperature) {
        validate(sd);
        if (temperature < 0.0)
            throw std::invalid_argument("OhmicKernels: temperature must be >= 0");
        base_ = 2.0 * std::numbers::pi * sd.alpha * std::pow(sd.omega_c, 1.0 - sd.s) *
                std::tgamma(sd.s + 1.0);
    }

    double d(double tau) const {
        const std::complex<double> z0(1.0 / sd_.omega_c, -tau);
        return base_ * std::pow(z0, -(sd_.s + 1.0)).imag();
    }

    double d1(double tau) const {
        const double p = sd_.s + 1.0;
        const std::complex<double> z0(1.0 / sd_.omega_c, -tau);
        std::complex<double> acc = std::pow(z0, -p);
        if (temperature_ > 0.0) {
            const double b = 1.0 / temperature_;
            const auto K = static_cast<std::size_t>(std::max(
                64.0, std::ceil(8.0 * temperature_ *
                                std::max({1.0 / sd_.omega_c, std::abs(tau), 1.0}))));
            std::complex<double> sum = 0.0;
            for (std::size_t k = 1; k <= K; ++k)
                sum += std::pow(z0 + static_cast<double>(k) * b, -p);
            // sum_{k=a}^inf f(k) = int_a^inf f + f(a)/2 - f'(a)/12 + f'''(a)/720 ...
            const double a = static_cast<double>(K) + 1.0;
            const std::complex<double> w = z0 + a * b;
            const std::complex<double> wp = std::pow(w, -p);
            const std::complex<double> tail =
                wp * w / (sd_.s * b) + 0.5 * wp + (p * b / 12.0) * wp / w -
                (p * (p + 1.0) * (p + 2.0) * b * b * b / 720.0) * wp / (w * w * w);
            acc += 2.0 * (sum + tail);
        }
        return base_ * acc.real();
    }

    const OhmicFamily& spectral_density() const { return sd_; }
    double temperature() const { return temperature_; }

private:
    OhmicFamily sd_;
    double temperature_;
    double base_;
};

// Noise kernel D1 and dissipation kernel D of a thermal bath, evaluated by
// adaptive quadrature of the defining semi-infinite transforms. D1 is even in
// tau, D is odd with D(0) = 0; D does not depend on temperature.
struct BathKernels {
    SpectralDensity sd;
    double temperature = 0.0;

    BathKernels(SpectralDensity density, double T) : sd(std::move(density)), temperature(T) {
        validate(sd);
        if (T < 0.0)
            throw std::invalid_argument("BathKernels: temperature must be >= 0");
    }

    quad::Result d1_with_error(double tau, quad::Options opt = {}) const {
        const double at = std::abs(tau);
        auto r = std::visit(
            [&](const auto& v) {
                if (opt.abs_tol == 0.0)
                    opt.abs_tol = 0.5 * opt.rel_tol * scale_hint(v);
                auto edges = detail::kernel_edges(v, at, opt.abs_tol);
                auto f = [&](double w) { return detail::j_coth(v, temperature, w) * std::cos(w * at); };
                return quad::integrate_panels(f, edges, opt);
            },
            sd);
        r.value *= 2.0;
        r.error *= 2.0;
        return r;
    }

    quad::Result d_with_error(double tau, quad::Options opt = {}) const {
        const double at = std::abs(tau);
        const double sign = tau < 0.0 ? -1.0 : 1.0;
        auto r = std::visit(
            [&](const auto& v) {
                if (opt.abs_tol == 0.0)
                    opt.abs_tol = 0.5 * opt.rel_tol * scale_hint(v);
                auto edges = detail::kernel_edges(v, at, opt.abs_tol);
                auto f = [&](double w) { return eval_j(v, w) * std::sin(w * at); };
                return quad::integrate_panels(f, edges, opt);
            },
            sd);
        r.value *= 2.0 * sign;
        r.error *= 2.0;
        return r;
    }

    double d1(double tau, const quad::Options& opt = {}) const {
        return d1_with_error(tau, opt).value;
    }

    double d(double tau, const quad::Options& opt = {}) const {
        return d_with_error(tau, opt).value;
    }

private:
    // rough magnitude of the kernels at tau = 0, used as the relative scale
    // for the absolute tolerance floor
    double scale_hint(const OhmicFamily& v) const {
        return std::abs(OhmicKernels(v, temperature).d1(0.0)) + 1e-300;
    }
    double scale_hint(const Lorentzian& v) const {
        const double vac = (v.gamma0 * v.lambda / std::numbers::pi) *
                           (std::numbers::pi / 2.0 + std::atan(v.omega0 / v.lambda));
        return vac * coth_half(std::max(v.omega0, v.lambda), temperature) + 1e-300;
    }
};

} // namespace nmflow
