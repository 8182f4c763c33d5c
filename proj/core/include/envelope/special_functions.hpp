#pragma once

namespace envelope {

/// Branch point of the Lambert function, -1/e.
inline constexpr double kLambertBranchPoint = -0.36787944117144233;

/// Argument of W0 below which 1 + 2 W0(z) < 0, i.e. -1/(2 sqrt(e)).
inline constexpr double kBindingThreshold = -0.30326532985631671;

/// Principal branch W0 of the inverse of w e^w, defined for z >= -1/e.
///
/// Starts from the branch-point series, a log(1 + z) based guess, or the
/// large-z asymptote, then polishes with Halley steps. Round-trip error is at
/// the level of a few ulps of max(1, |z|). Throws DomainError for z < -1/e.
double lambert_w0(double z);

enum class QuarticSign { plus, minus };

/// Unique non-negative root of 4 x^4 + 8 x - 3 Y = 0 (plus) or
/// 4 x^4 - 8 x - 3 Y = 0 (minus), Y >= 0.
///
/// For `minus` the root is the positive one (>= 2^(1/3)); for `plus` with
/// Y = 0 it is 0. Throws DomainError for Y < 0.
double g_root(QuarticSign sign, double y);

} // namespace envelope
