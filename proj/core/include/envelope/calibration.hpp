#pragma once

#include "envelope/closed_forms.hpp"
#include "envelope/quantum_numbers.hpp"

#include <span>
#include <utility>

namespace envelope {

struct FitResult {
    double phi = 0.0;
    /// fit_phi: E(phi) - e_ref. fit_phi_dataset: mean relative error at phi.
    double residual = 0.0;
    int iterations = 0;
    std::pair<double, double> bracket;
    /// Dataset fits only: false when the grid pre-scan saw more than one local minimum.
    bool unimodal = true;
};

struct ReferencePoint {
    StateSpec state;
    double energy;
};

/// (1/K) sum |approx_i - exact_i| / |exact_i|. DomainError on empty or
/// mismatched input or a zero exact value.
double mean_relative_error(std::span<const double> approx, std::span<const double> exact);

/// Closed-form ET result of the preset for `state` at the given phi.
ClosedFormResult preset_energy(const SystemPreset& preset, const StateSpec& state, double phi);

/// phi such that the preset's ET energy for `state` equals e_ref.
///
/// Pre-scans the bracket on a grid and throws InfeasibleError when a grid
/// point has no usable solution or E(phi) is not strictly monotone; throws
/// NoBracketError when E(phi) - e_ref keeps its sign. The root is located to
/// better than 1e-10 in phi.
FitResult fit_phi(const SystemPreset& preset, const StateSpec& state, double e_ref, std::pair<double, double> bracket);

/// phi minimising the mean relative error over `records`, by golden-section
/// search around the best point of a grid pre-scan (tolerance 1e-6 in phi).
FitResult fit_phi_dataset(const SystemPreset& preset, std::span<const ReferencePoint> records,
                          std::pair<double, double> bracket);

} // namespace envelope
