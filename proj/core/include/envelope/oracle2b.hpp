#pragma once

#include "envelope/hamiltonian.hpp"

#include <span>

namespace envelope {

/// Uniform grid on (0, r_max) with `points` interior nodes; u(0) = u(r_max) = 0.
struct RadialGrid {
    double r_max = 50.0;
    int points = 4000;
};

struct RadialGroundState {
    double energy;
    /// Energies on the coarse (h) and fine (h/2) grids before extrapolation.
    double coarse;
    double fine;
    /// max |u| over the outer 5% of the box relative to max |u|.
    double tail_ratio;
};

/// Lowest l = 0 eigenvalue of -(1/2 mu) u'' + V(r) u = E u in three dimensions,
/// V being the sum of `potential` terms.
///
/// Second-order finite differences, bisection on the Sturm count of the
/// tridiagonal matrix, then Richardson extrapolation from h and h/2. Throws
/// UnboundSpectrumError when the lowest level sits at or above the potential
/// at the box edge, and DomainError when the wavefunction tail at r_max
/// exceeds 1e-8 of its peak or the grid has fewer than 2000 points.
RadialGroundState radial_ground_state(double mu, std::span<const TermKind> potential, RadialGrid grid = {});

double ground_energy(double mu, std::span<const TermKind> potential, RadialGrid grid = {});
double ground_energy(double mu, const TermKind& potential, RadialGrid grid = {});

} // namespace envelope
