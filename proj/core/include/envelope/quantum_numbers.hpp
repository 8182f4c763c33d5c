#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace envelope {

/// Radial and orbital quantum numbers of one internal oscillator.
struct OscillatorLevel {
    int n = 0;
    int l = 0;

    friend bool operator==(const OscillatorLevel&, const OscillatorLevel&) = default;
};

/// Quantum numbers of the N-1 internal oscillators of an N-body state.
///
/// Entries keep their input order. The global quantum numbers only depend on
/// the sums of n and l, so no canonical ordering is imposed.
class StateSpec {
public:
    /// Throws DomainError when empty or when any entry is negative.
    explicit StateSpec(std::vector<OscillatorLevel> levels);

    /// All n = l = 0 for `particles` particles (particles >= 2).
    static StateSpec ground(int particles);

    /// Parses "n,l;n,l;..." (whitespace around tokens is ignored).
    static StateSpec parse(std::string_view text);

    std::span<const OscillatorLevel> levels() const noexcept { return levels_; }
    int particle_count() const noexcept { return static_cast<int>(levels_.size()) + 1; }
    int radial_sum() const noexcept;
    int orbital_sum() const noexcept;
    bool is_ground() const noexcept { return radial_sum() == 0 && orbital_sum() == 0; }

    std::string to_string() const;

    friend bool operator==(const StateSpec&, const StateSpec&) = default;

private:
    std::vector<OscillatorLevel> levels_;
};

/// Integer decomposition of Q_phi = phi * radial + orbital + oscillators * (d + phi - 2) / 2.
///
/// Two decompositions compare equal exactly, independent of phi.
struct GlobalQuantumTerms {
    int radial = 0;
    int orbital = 0;
    int oscillators = 0;
    int dimension = 0;

    double value(double phi) const noexcept;

    friend bool operator==(const GlobalQuantumTerms&, const GlobalQuantumTerms&) = default;
};

GlobalQuantumTerms global_terms(const StateSpec& state, int dimension);

/// Genuine global quantum number sum(2 n_i + l_i) + (N - 1) D / 2.
double global_q(const StateSpec& state, int dimension);

/// Modified global quantum number sum(phi n_i + l_i) + (N - 1)(D + phi - 2) / 2.
double global_q_phi(const StateSpec& state, int dimension, double phi);

/// (-1)^(sum l_i). Computed from the orbital sum for every phi.
int parity(const StateSpec& state) noexcept;

/// Number of particle pairs N (N - 1) / 2.
int pair_count(int particles);

} // namespace envelope
