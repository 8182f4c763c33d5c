#pragma once

#include <cmath>
#include <utility>

namespace envelope::detail {

struct RootResult {
    double root;
    int iterations;
};

// Newton steps kept inside a shrinking sign-change bracket, with bisection
// whenever a step leaves the bracket. `fdf(x)` returns (f, f'). Bisection is
// geometric while the bracket spans more than a factor of two on x > 0.
// Stops when the bracket or the Newton step falls below rel_width * |x|.
template <class F>
RootResult safeguarded_newton(F&& fdf, double lo, double hi, double rel_width = 1e-15, int max_iter = 300) {
    const double flo = fdf(lo).first;
    const double fhi = fdf(hi).first;
    if (flo == 0.0) return {lo, 0};
    if (fhi == 0.0) return {hi, 0};
    const bool rising = flo < 0.0;

    auto midpoint = [](double a, double b) { return a > 0.0 && b > 2.0 * a ? std::sqrt(a * b) : 0.5 * (a + b); };

    double x = midpoint(lo, hi);
    for (int it = 1; it <= max_iter; ++it) {
        const auto [f, df] = fdf(x);
        if (f == 0.0) return {x, it};
        ((f < 0.0) == rising ? lo : hi) = x;
        if (hi - lo <= rel_width * std::abs(x)) return {x, it};

        const double next = x - f / df;
        if (!std::isfinite(next) || next <= lo || next >= hi) {
            x = midpoint(lo, hi);
            continue;
        }
        const bool settled = std::abs(next - x) <= rel_width * std::abs(x);
        x = next;
        if (settled) return {x, it};
    }
    return {x, max_iter};
}

} // namespace envelope::detail
