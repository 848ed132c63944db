// quad.hpp — adaptive panel quadrature on finite intervals
//
// Gauss-Kronrod 7/15 per panel with a global worst-panel-first refinement
// queue. Callers seed the panel layout; for integrands oscillating like
// cos(omega * tau) the seed spacing must resolve the oscillation (see
// oscillatory_edges), otherwise a single coarse panel can alias to a
// converged-looking wrong answer.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nmflow/errors.hpp"

namespace nmflow::quad {

struct Options {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;            // absolute floor; 0 means purely relative
    std::size_t max_panels = 400000; // refinement budget
};

struct Result {
    double value = 0.0;
    double error = 0.0;     // achieved absolute error estimate
    std::size_t panels = 0;
};

namespace detail {

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel eval_panel(const F& f, double a, double b) {
    Panel p{a, b, 0.0, 0.0};
    p.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, 0, 0.0, &p.error);
    return p;
}

} // namespace detail

// Panel edges for int_a^b g(w) * trig(w * osc) dw: spacing capped at a quarter
// period pi / (4 * osc) inside [a, core_end], geometric growth (ratio 1.25)
// beyond, where the integrand is assumed to decay smoothly.
inline std::vector<double> oscillatory_edges(double a, double b, double osc,
                                             double core_end, double core_step) {
    std::vector<double> edges;
    edges.push_back(a);
    double step = core_step;
    if (osc > 0.0)
        step = std::min(step, 3.14159265358979323846 / (4.0 * osc));
    double w = a;
    const double core = std::min(core_end, b);
    while (w + step < core) {
        w += step;
        edges.push_back(w);
    }
    // geometric tail
    double h = std::max(step, (core - a) * 0.05);
    while (w < b) {
        w = std::min(b, w + h);
        edges.push_back(w);
        h *= 1.25;
        if (osc > 0.0)
            h = std::min(h, 3.14159265358979323846 / (4.0 * osc) * 64.0);
    }
    if (edges.back() != b)
        edges.push_back(b);
    return edges;
}

// Fine geometric grading toward the left endpoint, for integrable endpoint
// singularities such as w^(s-1) with 0 < s < 1.
inline void grade_left_edge(std::vector<double>& edges, double first_width) {
    if (edges.size() < 2)
        return;
    const double a = edges[0];
    const double b1 = edges[1];
    std::vector<double> graded;
    double w = std::max(first_width, (b1 - a) * 1e-12);
    while (a + w < b1) {
        graded.push_back(a + w);
        w *= 2.0;
    }
    edges.insert(edges.begin() + 1, graded.begin(), graded.end());
}

template <class F>
Result integrate_panels(const F& f, std::span<const double> edges, const Options& opt = {}) {
    std::priority_queue<detail::Panel> heap;
    double value = 0.0, error = 0.0;
    std::size_t panels = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto p = detail::eval_panel(f, edges[i], edges[i + 1]);
        value += p.value;
        error += p.error;
        heap.push(p);
        ++panels;
    }
    auto tolerance = [&]() {
        return std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
    };
    while (error > tolerance() && panels < opt.max_panels) {
        detail::Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // panel can no longer be split in floating point
            heap.push(worst);
            break;
        }
        auto left = detail::eval_panel(f, worst.a, mid);
        auto right = detail::eval_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    if (error > std::max(tolerance(), 1e-300) * 1.0000001 && error > opt.abs_tol) {
        // tolerate a tiny overshoot from the error bookkeeping; anything more
        // is a genuine convergence failure
        if (error > 10.0 * tolerance())
            throw QuadratureError("adaptive quadrature did not converge", value, error);
    }
    return {value, error, panels};
}

template <class F>
Result integrate(const F& f, double a, double b, const Options& opt = {}) {
    const std::vector<double> edges = {a, 0.5 * (a + b), b};
    return integrate_panels(f, edges, opt);
}

} // namespace nmflow::quad
