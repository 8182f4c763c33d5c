#pragma once

#include "envelope/et_solver.hpp"
#include "envelope/hamiltonian.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace envelope {

/// T = p^2/2m, U = 0, V = -V0 exp(-r^2/R^2).
struct WeaklyInteracting {
    double mass;
    double depth;
    double range;
};

/// T = p^2/2m, U = 0, V = -g/r.
struct SelfGravitating {
    double mass;
    double coupling;
};

/// T = p^2/2m, U = m omega^2 s^2 / 2, V = +g/r.
struct Confined {
    double mass;
    double omega;
    double coupling;
};

/// T = p, U = lambda s, V = -g/r.
struct LargeNBaryon {
    double tension;
    double coupling;
};

using SystemParameters = std::variant<WeaklyInteracting, SelfGravitating, Confined, LargeNBaryon>;

/// One of the four analytically solvable systems with its particle count,
/// dimension, and a free-form units label (no conversion is ever applied).
struct SystemPreset {
    SystemParameters parameters;
    int particles = 2;
    int dimension = 3;
    std::string units;

    /// Short name: "wib", "sgb", "cb" or "lnb".
    std::string_view name() const noexcept;
    HamiltonianSpec hamiltonian() const;
    SystemPreset with_particles(int n) const;
};

struct ClosedFormResult {
    double r0;
    double energy;
    SolveStatus status;
};

/// Lambert-W solution. NoSolution when the Lambert argument lies below -1/e,
/// Irrelevant when the real energy is >= 0.
ClosedFormResult wib_solution(int particles, int dimension, double mass, double depth, double range, double q_phi);

/// Argument Y of W0 in the Gaussian solution (always negative).
double wib_lambert_argument(int particles, double mass, double depth, double range, double q_phi);

ClosedFormResult sgb_solution(int particles, double mass, double coupling, double q_phi);

/// Harmonic confinement plus Coulomb repulsion, via the positive root G-(Y).
/// For g = 0 it returns the exact oscillator energy omega * q_phi.
ClosedFormResult cb_solution(int particles, double mass, double omega, double coupling, double q_phi);

/// Argument Y of G- in the confined-boson solution (g > 0).
double cb_quartic_argument(int particles, double mass, double omega, double coupling, double q_phi);

/// Adds the centre-of-mass oscillator ground energy D omega / 2.
double add_cm_offset(double energy, int dimension, double omega);

/// Ultrarelativistic solution. NoSolution (collapse) when N Q - C_N^(3/2) g <= 0.
ClosedFormResult lnb_solution(int particles, double tension, double coupling, double q_phi);

/// Dispatches on the preset kind.
ClosedFormResult closed_form(const SystemPreset& preset, double q_phi);

} // namespace envelope
