#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's own solvers.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace oracle {

template <class F>
double central_difference(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Plain bisection; assumes a sign change on [lo, hi].
template <class F>
double bisect(F&& f, double lo, double hi, int iterations = 200) {
    const bool rising = f(lo) < 0.0;
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        ((f(mid) < 0.0) == rising ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Every sign change of f on a log-spaced grid, each refined by bisection.
template <class F>
std::vector<double> all_roots_log(F&& f, double lo, double hi, int points) {
    std::vector<double> roots;
    double prev_x = lo;
    double prev_f = f(lo);
    for (int i = 1; i < points; ++i) {
        const double x = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
        const double fx = f(x);
        if ((fx < 0.0) != (prev_f < 0.0)) roots.push_back(bisect(f, prev_x, x));
        prev_x = x;
        prev_f = fx;
    }
    return roots;
}

// Adaptive Gauss-Kronrod on [0, infinity).
template <class F>
double integrate_half_line(F&& f) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-14);
}

// Surface area of the unit sphere in D dimensions.
inline double sphere_area(int d) { return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d); }

// Positive root of 4x^4 + s 8x - 3Y from the radical expression
// G = -s/2 sqrt(V) + 1/2 sqrt(4 V^(-1/2) - V), s = +1 or -1.
inline double g_radical(int s, double y) {
    const double a = 2.0 + std::sqrt(4.0 + y * y * y);
    const double v = std::cbrt(a) - y / std::cbrt(a);
    return -0.5 * s * std::sqrt(v) + 0.5 * std::sqrt(4.0 / std::sqrt(v) - v);
}

} // namespace oracle
