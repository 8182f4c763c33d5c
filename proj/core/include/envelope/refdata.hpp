#pragma once

#include "envelope/closed_forms.hpp"
#include "envelope/quantum_numbers.hpp"

#include <array>
#include <span>
#include <string>

namespace envelope {

/// One three-quark eigenmass (GeV) with its accurate value and four ET columns.
struct ReferenceRecord {
    int n_sum;
    int l_sum;
    double exact;
    double et_phi2;
    double et_phi_sqrt2;
    double et_phi135;
    double et_phi123;
};

/// The four phi values of the ET columns, in column order.
inline constexpr std::array<double, 4> kTable1Phis = {2.0, 1.4142135623730951, 1.35, 1.23};

/// Printed mean relative errors (fractions) of the four ET columns.
inline constexpr std::array<double, 4> kTable1Deltas = {0.151, 0.044, 0.031, 0.024};

/// Baryon spectrum for N = 3, D = 3, lambda = 0.2, g = 2/3 * 0.4, in printed row order.
std::span<const ReferenceRecord, 16> table1() noexcept;

/// ET column `column` (0..3, same order as kTable1Phis).
double et_column(const ReferenceRecord& record, std::size_t column);

/// Canonical split: n1 = n_sum, l1 = l_sum, second oscillator in its ground level.
StateSpec state_from_record(const ReferenceRecord& record);

/// CSV with header n_sum,l_sum,exact,phi2,phi_sqrt2,phi135,phi123 and 3-decimal energies.
std::string table1_csv();

// Published parameter sets.

/// Helium-like soft Gaussian bosons, energies in K and lengths in a.u.
SystemPreset wib_preset(int particles = 2);
/// Self-gravitating bosons with m = g = 1.
SystemPreset sgb_preset(int particles = 2);
/// Harmonically confined bosons with Coulomb repulsion, m = 1, omega = 0.5, g = 1.
SystemPreset cb_preset(int particles = 2);
/// Large-N baryons, lambda = 0.2 GeV^2, g = 2 alpha_S / 3 with alpha_S = 0.4.
SystemPreset lnb_preset(int particles = 3);

/// Inverse mass of the Gaussian preset in (a.u.)^2 K.
inline constexpr double kWibInverseMass = 43.281307;
inline constexpr double kWibDepth = 1.227;
inline constexpr double kWibRange = 10.03;
inline constexpr double kLnbTension = 0.2;
inline constexpr double kLnbAlphaS = 0.4;

/// Coefficient of the ground-state energy for self-gravitating bosons at
/// phi = 1, D = 3: E = -kSgbCoefficient N^2 (N-1) m g^2.
inline constexpr double kSgbCoefficient = 1.0 / 16.0;
/// Literature lower bound E > -0.0593 N^2 (N-1) m g^2, kept for comparison only.
inline constexpr double kSgbLiteratureBoundCoefficient = 0.0593;

/// Preset by short name ("wib", "sgb", "cb", "lnb"); DomainError otherwise.
SystemPreset preset_by_name(std::string_view name, int particles);

} // namespace envelope
