#pragma once

#include "fockhaus/error.hpp"
#include "fockhaus/numeric.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <type_traits>

namespace fockhaus::quad {

struct LineOptions {
    double rel_tol = 1e-12;
    /// Marching towards an infinite end stops once a whole panel stays below
    /// tail_ratio times the largest integrand value seen so far and its
    /// integral is below tail_ratio times the running total. The second test
    /// keeps integrable endpoint singularities from stopping the march early.
    double tail_ratio = 1e-16;
    int max_panels = 200;
};

namespace detail {

inline boost::math::quadrature::tanh_sinh<double>& tanh_sinh_engine() {
    thread_local boost::math::quadrature::tanh_sinh<double> engine;
    return engine;
}

template <class R>
double magnitude(const R& v) {
    return std::abs(v);
}

}  // namespace detail

/// Double-exponential quadrature on a finite interval. Endpoint singularities
/// are tolerated.
template <class F>
auto integrate_finite(F&& f, double a, double b, double rel_tol = 1e-12) {
    using R = std::decay_t<std::invoke_result_t<F&, double>>;
    if (a == b) return R{};
    double err = 0.0;
    return detail::tanh_sinh_engine().integrate(f, a, b, rel_tol, &err);
}

/// Integrates f over (lo, hi) where either end may be infinite. Infinite ends
/// are reached by panels of doubling width anchored at the finite end (or at 0).
template <class F>
auto integrate_line(F&& f, double lo, double hi, const LineOptions& opt = {}) {
    using R = std::decay_t<std::invoke_result_t<F&, double>>;
    if (!(lo < hi)) return R{};
    if (std::isfinite(lo) && std::isfinite(hi)) return integrate_finite(f, lo, hi, opt.rel_tol);

    double running_max = 0.0;
    R total{};
    auto march = [&](double start, double direction) {
        double a = start;
        double width = 1.0;
        for (int i = 0; i < opt.max_panels; ++i) {
            const double b = a + direction * width;
            double panel_max = 0.0;
            auto tracked = [&](double u) {
                R v = f(u);
                const double m = detail::magnitude(v);
                if (std::isfinite(m)) panel_max = std::max(panel_max, m);
                return v;
            };
            const R panel = direction > 0 ? integrate_finite(tracked, a, b, opt.rel_tol)
                                          : integrate_finite(tracked, b, a, opt.rel_tol);
            total += panel;
            running_max = std::max(running_max, panel_max);
            if (panel_max <= opt.tail_ratio * running_max &&
                detail::magnitude(panel) <= opt.tail_ratio * detail::magnitude(total)) {
                return;
            }
            a = b;
            width *= 2.0;
        }
        throw TruncationError("integrand did not decay within the panel budget");
    };

    if (std::isfinite(lo)) {
        march(lo, +1.0);
    } else if (std::isfinite(hi)) {
        march(hi, -1.0);
    } else {
        march(0.0, +1.0);
        march(0.0, -1.0);
    }
    return total;
}

/// 20-point Gauss-Legendre rule mapped to [a, b]; calls sink(node, weight).
template <class Sink>
void gauss_legendre_20(double a, double b, Sink&& sink) {
    using rule = boost::math::quadrature::gauss<double, 20>;
    const auto& x = rule::abscissa();
    const auto& w = rule::weights();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < x.size(); ++i) {
        sink(mid - half * x[i], half * w[i]);
        sink(mid + half * x[i], half * w[i]);
    }
}

}  // namespace fockhaus::quad
