#pragma once

#include "envelope/hamiltonian.hpp"

#include <optional>
#include <string_view>
#include <utility>

namespace envelope {

enum class BoundTag { UpperBound, LowerBound, Unknown };

/// Ok: a stationary point with a physically usable energy.
/// Irrelevant: a stationary point exists, but E >= 0 for a system whose only
/// interaction is an attraction vanishing at large distance.
/// NoSolution: the stationarity condition has no root in the search range.
enum class SolveStatus { Ok, Irrelevant, NoSolution };

std::string_view to_string(BoundTag tag) noexcept;
std::string_view to_string(SolveStatus status) noexcept;

struct EtSolution {
    double energy = 0.0;
    double r0 = 0.0;
    double p0 = 0.0;
    double q_phi = 0.0;
    BoundTag bound = BoundTag::Unknown;
    SolveStatus status = SolveStatus::NoSolution;
    /// Number of distinct stationary points found by the scan.
    int roots_found = 0;
};

struct SolveOptions {
    /// Optional starting bracket for r0; expanded geometrically when it holds no sign change.
    std::optional<std::pair<double, double>> bracket_hint;
    /// Only used to decide the bound tag: any phi other than 2 gives Unknown.
    double phi = 2.0;
};

/// Energy N T(p0) + N U(r0/N) + C_N V(r0/sqrt(C_N)) with p0 = q_phi / r0.
double et_energy(const HamiltonianSpec& h, double q_phi, double r0);

/// N p0 T'(p0) - r0 U'(r0/N) - sqrt(C_N) r0 V'(r0/sqrt(C_N)) with p0 = q_phi / r0.
///
/// Equals -r0 dE/dr0, so its zeros are the stationary points of et_energy.
double residual(const HamiltonianSpec& h, double q_phi, double r0);

/// Length scale used to centre the r0 scan. Built from the balance of the
/// kinetic scaling against each potential's scaling; 1 if nothing balances.
double characteristic_length(const HamiltonianSpec& h, double q_phi);

/// Known bound directions for (T, U, V) combinations at phi = 2.
BoundTag bound_direction(const HamiltonianSpec& h, double phi);

/// True when the system has no one-body term and a pairwise attraction that
/// vanishes at infinity, so any bound energy must be negative.
bool binds_below_zero(const HamiltonianSpec& h) noexcept;

/// Solves the stationarity condition for r0 and returns the ET eigenvalue.
///
/// Scans r0 log-uniformly over [1e-8, 1e8] * characteristic_length, refines
/// every sign change with a bracketed Newton iteration, and keeps the root
/// with the lowest energy. Throws DomainError for q_phi <= 0 and NumericError
/// when a term evaluates to a non-finite value.
EtSolution solve(const HamiltonianSpec& h, double q_phi, const SolveOptions& options = {});

} // namespace envelope
