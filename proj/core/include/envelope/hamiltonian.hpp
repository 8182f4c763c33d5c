#pragma once

#include <string>
#include <variant>

namespace envelope {

// Kinetic kinds, functions of the momentum p.

/// T(p) = p^2 / (2 m).
struct NonrelativisticKinetic {
    double mass = 1.0;
};

/// T(p) = p (massless particles).
struct UltrarelativisticKinetic {};

// Potential kinds, functions of a distance x.

/// -V0 exp(-x^2 / R^2).
struct Gaussian {
    double depth = 1.0;
    double range = 1.0;
};

/// g / x. Attractive for g < 0.
struct Coulomb {
    double coupling = 0.0;
};

/// lambda x.
struct Linear {
    double tension = 1.0;
};

/// m omega^2 x^2 / 2.
struct Harmonic {
    double mass = 1.0;
    double omega = 1.0;
};

/// a x^b. Not one of the physical systems shipped as presets; kept so the
/// generic solver can be exercised on other shapes.
struct PowerLaw {
    double coefficient = 1.0;
    double exponent = 1.0;
};

struct Zero {};

using TermKind = std::variant<NonrelativisticKinetic, UltrarelativisticKinetic, Gaussian, Coulomb, Linear,
                              Harmonic, PowerLaw, Zero>;

bool is_kinetic(const TermKind& term) noexcept;

/// Throws DomainError when a parameter is outside its sign domain.
void validate_term(const TermKind& term);

/// Value of the term at x >= 0. Throws SingularityError at a divergence and
/// DomainError for negative x.
double term_value(const TermKind& term, double x);

/// Analytic first derivative.
double term_derivative(const TermKind& term, double x);

/// Analytic second derivative.
double term_second_derivative(const TermKind& term, double x);

/// True when the potential pulls particles together everywhere (V' > 0).
bool is_attractive(const TermKind& term) noexcept;

std::string describe(const TermKind& term);

/// H = sum T(|p_i|) + sum U(|r_i - R|) + sum_{i<j} V(|r_i - r_j|) for N identical
/// particles in D dimensions.
class HamiltonianSpec {
public:
    /// Validates N >= 2, D >= 2, the kind class of each slot and all parameters.
    HamiltonianSpec(int particles, int dimension, TermKind kinetic, TermKind one_body, TermKind pairwise);

    int particles() const noexcept { return particles_; }
    int dimension() const noexcept { return dimension_; }
    const TermKind& kinetic() const noexcept { return kinetic_; }
    const TermKind& one_body() const noexcept { return one_body_; }
    const TermKind& pairwise() const noexcept { return pairwise_; }

    HamiltonianSpec with_particles(int particles) const;

private:
    int particles_;
    int dimension_;
    TermKind kinetic_;
    TermKind one_body_;
    TermKind pairwise_;
};

} // namespace envelope
