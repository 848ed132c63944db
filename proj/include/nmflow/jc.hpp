// jc.hpp — damped Jaynes-Cummings model with a Lorentzian reservoir
//
// The dynamics is exactly solvable through the amplitude function G(t) with
// G(0) = 1. For gamma0 < lambda/2 the decay is monotone (Markovian regime);
// for gamma0 > lambda/2 the discriminant turns negative, G(t) oscillates
// through zeros and the time-local rate diverges at each zero while the
// reduced state stays finite.

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "nmflow/errors.hpp"
#include "nmflow/spectral.hpp"

namespace nmflow::jc {

struct Params {
    double omega0;  // qubit splitting
    double gamma0;  // coupling strength
    double lambda;  // Lorentzian width

    Params(double w0, double g0, double l) : omega0(w0), gamma0(g0), lambda(l) {
        if (!(omega0 > 0.0) || !(gamma0 > 0.0) || !(lambda > 0.0))
            throw std::invalid_argument("jc::Params: omega0, gamma0, lambda must be > 0");
    }

    bool markovian() const { return gamma0 < 0.5 * lambda; }
    double discriminant() const { return lambda * lambda - 2.0 * gamma0 * lambda; }
    Lorentzian spectral_density() const { return {gamma0, lambda, omega0}; }
};

struct Amplitude {
    double t;
    double G;
    double Gdot;
};

// Closed-form G(t) and its derivative. Both regimes come from one analytic
// continuation: real d for gamma0 < lambda/2, cosh/sinh -> cos/sin of |d|t/2
// for gamma0 > lambda/2, and the d -> 0 limit exactly at the boundary. The
// weak-coupling branch is assembled from decaying exponentials only, so it
// cannot overflow at large t.
inline Amplitude amplitude(const Params& p, double t) {
    if (t < 0.0)
        throw std::domain_error("jc::amplitude requires t >= 0");
    const double disc = p.discriminant();
    const double lam = p.lambda;
    Amplitude a{t, 0.0, 0.0};
    if (disc > 1e-24 * lam * lam) {
        const double d = std::sqrt(disc);
        const double em = std::exp(-0.5 * (lam - d) * t);  // slow decay, lam > d
        const double ep = std::exp(-0.5 * (lam + d) * t);
        a.G = 0.5 * ((1.0 + lam / d) * em + (1.0 - lam / d) * ep);
        a.Gdot = -(p.gamma0 * lam / (2.0 * d)) * (em - ep);
    } else if (disc < -1e-24 * lam * lam) {
        const double dd = std::sqrt(-disc);
        const double env = std::exp(-0.5 * lam * t);
        const double c = std::cos(0.5 * dd * t);
        const double s = std::sin(0.5 * dd * t);
        a.G = env * (c + (lam / dd) * s);
        a.Gdot = -(p.gamma0 * lam / dd) * env * s;
    } else {
        const double env = std::exp(-0.5 * lam * t);
        a.G = env * (1.0 + 0.5 * lam * t);
        a.Gdot = -(p.gamma0 * lam * 0.5 * t) * env;
    }
    return a;
}

inline constexpr double kRateSingularThreshold = 1e-12;

// Relaxation rate gamma(t) = -2 Re[Gdot/G]. Negative values on an interval
// mark non-Markovian dynamics; at zeros of G the rate diverges and a
// SingularRateError is thrown instead of returning an unusable number.
inline double rate(const Params& p, double t, double g_threshold = kRateSingularThreshold) {
    const Amplitude a = amplitude(p, t);
    if (std::abs(a.G) < g_threshold)
        throw SingularRateError("jc::rate: G(t) below singularity threshold", t);
    return -2.0 * a.Gdot / a.G;
}

// Reduced state as a Bloch vector for the one-parameter family of pure
// initial states: B = (sin(eta) G, 0, (cos(eta)+1) G^2 - 1).
inline Eigen::Vector3d bloch_state(const Params& p, double eta, double t) {
    const Amplitude a = amplitude(p, t);
    const double g2 = a.G * a.G;
    return {std::sin(eta) * a.G, 0.0, (std::cos(eta) + 1.0) * g2 - 1.0};
}

// SLD-QFI flow 2 G Gdot for the optimal initial state (sin eta = 1).
inline double qfi_flow(const Params& p, double t) {
    const Amplitude a = amplitude(p, t);
    return 2.0 * a.G * a.Gdot;
}

// Time-resolved energy current omega0 G Gdot; identically (omega0/2) times
// the QFI flow.
inline double energy_current(const Params& p, double t) {
    const Amplitude a = amplitude(p, t);
    return p.omega0 * (a.G * a.Gdot);
}

inline double qfi_flow(const Amplitude& a) { return 2.0 * a.G * a.Gdot; }
inline double energy_current(const Params& p, const Amplitude& a) {
    return p.omega0 * (a.G * a.Gdot);
}

struct VolterraResult {
    std::vector<double> t;
    std::vector<double> G;
    std::vector<double> Gdot;
    bool accuracy_warning = false;  // set when dt exceeds the 0.01/lambda guard
};

// Independent oracle for the closed form: marches the memory-kernel equation
//   dG/dt = - int_0^t f(t - tau) G(tau) dtau
// with trapezoidal history quadrature and a predictor-corrector update. The
// kernel f is sampled once on the grid.
inline VolterraResult solve_volterra(const std::function<double(double)>& memory_kernel,
                                     double lambda_scale, double t_max, double dt) {
    if (!(dt > 0.0) || !(t_max > 0.0))
        throw std::invalid_argument("jc::solve_volterra: dt and t_max must be > 0");
    const auto n = static_cast<std::size_t>(std::llround(t_max / dt)) + 1;
    VolterraResult r;
    r.accuracy_warning = dt > 0.01 / lambda_scale;
    r.t.resize(n);
    r.G.resize(n);
    r.Gdot.resize(n);
    std::vector<double> f(n);
    for (std::size_t j = 0; j < n; ++j) {
        r.t[j] = dt * static_cast<double>(j);
        f[j] = memory_kernel(r.t[j]);
    }
    r.G[0] = 1.0;
    r.Gdot[0] = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        double interior = 0.0;  // sum_{k=1}^{j-1} f(t_j - t_k) G(t_k)
        for (std::size_t k = 1; k < j; ++k)
            interior += f[j - k] * r.G[k];
        const double fixed = 0.5 * f[j] * r.G[0] + interior;
        double g_next = r.G[j - 1] + dt * r.Gdot[j - 1];  // predictor
        double conv = 0.0;
        for (int it = 0; it < 3; ++it) {
            conv = dt * (fixed + 0.5 * f[0] * g_next);
            g_next = r.G[j - 1] + 0.5 * dt * (r.Gdot[j - 1] - conv);
        }
        r.G[j] = g_next;
        r.Gdot[j] = -dt * (fixed + 0.5 * f[0] * g_next);
    }
    return r;
}

// Memory kernel of the Lorentzian bath centered at the system frequency:
// f(t) = (gamma0 lambda / 2) exp(-lambda |t|), the inverse Fourier transform
// of J(omega) taken over the full line.
inline VolterraResult solve_volterra(const Lorentzian& sd, double t_max, double dt) {
    validate(sd);
    const double g0 = sd.gamma0, lam = sd.lambda;
    auto f = [g0, lam](double u) { return 0.5 * g0 * lam * std::exp(-lam * std::abs(u)); };
    return solve_volterra(f, lam, t_max, dt);
}

inline VolterraResult solve_volterra(const Params& p, double t_max, double dt) {
    return solve_volterra(p.spectral_density(), t_max, dt);
}

// Zeros of G on [0, t_max] in the strong-coupling regime, by bisection on the
// closed form. Empty in the Markovian regime where G stays positive.
inline std::vector<double> amplitude_zeros(const Params& p, double t_max) {
    std::vector<double> zeros;
    if (p.discriminant() >= 0.0)
        return zeros;
    const double dd = std::sqrt(-p.discriminant());
    // G = 0 where tan(|d| t / 2) = -|d| / lambda
    const double first = (std::numbers::pi - std::atan(dd / p.lambda)) * 2.0 / dd;
    const double period = 2.0 * std::numbers::pi / dd;
    for (double z = first; z <= t_max; z += period)
        zeros.push_back(z);
    return zeros;
}

} // namespace nmflow::jc
