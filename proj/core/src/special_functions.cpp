#include "envelope/special_functions.hpp"

#include "envelope/errors.hpp"
#include "safeguarded_newton.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace envelope {

namespace {

double branch_series(double p) {
    // W0 around z = -1/e in powers of p = sqrt(2 (e z + 1)).
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

double initial_guess(double z) {
    if (z < -0.25) {
        const double q = std::numbers::e * z + 1.0;
        return branch_series(std::sqrt(2.0 * std::max(q, 0.0)));
    }
    if (z < 3.0) {
        // Winitzki's approximation.
        const double l = std::log1p(z);
        return l * (1.0 - std::log1p(l) / (2.0 + l));
    }
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
}

} // namespace

double lambert_w0(double z) {
    if (std::isnan(z)) throw DomainError("lambert_w0: argument is NaN");
    if (z == 0.0) return 0.0;
    if (std::isinf(z)) return z;

    // The double nearest -1/e can land a few ulps on either side of the true branch point.
    const double q = std::numbers::e * z + 1.0;
    if (z < kLambertBranchPoint && q < -4.0 * std::numeric_limits<double>::epsilon())
        throw DomainError("lambert_w0: argument below -1/e");
    if (q <= 0.0) return -1.0;

    const double p = std::sqrt(2.0 * q);
    if (p < 1e-3) return branch_series(p);

    double w = initial_guess(z);
    for (int i = 0; i < 12; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        const double wp1 = w + 1.0;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) break;
    }
    return w;
}

double g_root(QuarticSign sign, double y) {
    if (!(y >= 0.0) || !std::isfinite(y)) throw DomainError("g_root: Y must be finite and >= 0");
    const double s = sign == QuarticSign::plus ? 8.0 : -8.0;
    if (y == 0.0) return sign == QuarticSign::plus ? 0.0 : std::cbrt(2.0);

    const double lo = sign == QuarticSign::plus ? 0.0 : std::cbrt(2.0);
    const double hi = 3.0 + std::pow(0.75 * y, 0.25);
    auto fdf = [&](double x) {
        const double x3 = x * x * x;
        return std::pair{4.0 * x3 * x + s * x - 3.0 * y, 16.0 * x3 + s};
    };
    return detail::safeguarded_newton(fdf, lo, hi, 4e-16).root;
}

} // namespace envelope
