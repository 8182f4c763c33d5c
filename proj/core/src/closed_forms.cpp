#include "envelope/closed_forms.hpp"

#include "envelope/errors.hpp"
#include "envelope/quantum_numbers.hpp"
#include "envelope/special_functions.hpp"

#include <cmath>
#include <limits>

namespace envelope {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and > 0");
}

void non_negative(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and >= 0");
}

} // namespace

std::string_view SystemPreset::name() const noexcept {
    return std::visit(overloaded{
                          [](const WeaklyInteracting&) { return std::string_view("wib"); },
                          [](const SelfGravitating&) { return std::string_view("sgb"); },
                          [](const Confined&) { return std::string_view("cb"); },
                          [](const LargeNBaryon&) { return std::string_view("lnb"); },
                      },
                      parameters);
}

HamiltonianSpec SystemPreset::hamiltonian() const {
    return std::visit(
        overloaded{
            [&](const WeaklyInteracting& p) {
                return HamiltonianSpec(particles, dimension, NonrelativisticKinetic{p.mass}, Zero{},
                                       Gaussian{p.depth, p.range});
            },
            [&](const SelfGravitating& p) {
                return HamiltonianSpec(particles, dimension, NonrelativisticKinetic{p.mass}, Zero{},
                                       Coulomb{-p.coupling});
            },
            [&](const Confined& p) {
                return HamiltonianSpec(particles, dimension, NonrelativisticKinetic{p.mass},
                                       Harmonic{p.mass, p.omega}, Coulomb{p.coupling});
            },
            [&](const LargeNBaryon& p) {
                return HamiltonianSpec(particles, dimension, UltrarelativisticKinetic{}, Linear{p.tension},
                                       Coulomb{-p.coupling});
            },
        },
        parameters);
}

SystemPreset SystemPreset::with_particles(int n) const {
    SystemPreset copy = *this;
    copy.particles = n;
    return copy;
}

double wib_lambert_argument(int particles, double mass, double depth, double range, double q_phi) {
    pair_count(particles);
    positive(mass, "mass");
    positive(depth, "V0");
    positive(range, "R");
    positive(q_phi, "q_phi");
    const double n = particles;
    return -q_phi / (std::sqrt(n) * (n - 1.0) * range * std::sqrt(2.0 * mass * depth));
}

ClosedFormResult wib_solution(int particles, int dimension, double mass, double depth, double range, double q_phi) {
    if (dimension < 2) throw DomainError("dimension must be >= 2");
    const double y = wib_lambert_argument(particles, mass, depth, range, q_phi);
    if (y < kLambertBranchPoint) return {kNaN, kNaN, SolveStatus::NoSolution};

    const double n = particles;
    const double w = lambert_w0(y);
    const double r0 = std::sqrt(n * (n - 1.0)) * std::sqrt(-w) * range;
    const double energy = -0.5 * n * (n - 1.0) * depth * y * y * (1.0 + 2.0 * w) / (w * w);
    return {r0, energy, energy >= 0.0 ? SolveStatus::Irrelevant : SolveStatus::Ok};
}

ClosedFormResult sgb_solution(int particles, double mass, double coupling, double q_phi) {
    pair_count(particles);
    positive(mass, "mass");
    positive(coupling, "g");
    positive(q_phi, "q_phi");
    const double n = particles;
    const double q2 = q_phi * q_phi;
    const double r0 = std::pow(2.0, 1.5) * q2 / (std::sqrt(n) * std::pow(n - 1.0, 1.5) * mass * coupling);
    const double energy = -n * n * std::pow(n - 1.0, 3) * mass * coupling * coupling / (16.0 * q2);
    return {r0, energy, SolveStatus::Ok};
}

double cb_quartic_argument(int particles, double mass, double omega, double coupling, double q_phi) {
    pair_count(particles);
    positive(mass, "mass");
    positive(omega, "omega");
    positive(coupling, "g");
    positive(q_phi, "q_phi");
    const double n = particles;
    return std::pow(2.0, 16.0 / 3.0) / 3.0 / (std::pow(n, 4.0 / 3.0) * (n - 1.0) * (n - 1.0)) *
           std::pow(omega / (mass * coupling * coupling), 2.0 / 3.0) * q_phi * q_phi;
}

ClosedFormResult cb_solution(int particles, double mass, double omega, double coupling, double q_phi) {
    pair_count(particles);
    positive(mass, "mass");
    positive(omega, "omega");
    non_negative(coupling, "g");
    positive(q_phi, "q_phi");
    const double n = particles;
    if (coupling == 0.0) return {std::sqrt(n * q_phi / (mass * omega)), omega * q_phi, SolveStatus::Ok};

    const double g = g_root(QuarticSign::minus, cb_quartic_argument(particles, mass, omega, coupling, q_phi));
    const double r0 = std::pow(n, 5.0 / 6.0) * std::sqrt(n - 1.0) / std::pow(2.0, 5.0 / 6.0) *
                      std::cbrt(coupling / (mass * omega * omega)) * g;
    const double energy = std::pow(n, 2.0 / 3.0) * (n - 1.0) / std::pow(2.0, 5.0 / 3.0) *
                          std::cbrt(mass * omega * omega * coupling * coupling) * (g * g + 1.0 / g);
    return {r0, energy, SolveStatus::Ok};
}

double add_cm_offset(double energy, int dimension, double omega) {
    positive(omega, "omega");
    return energy + 0.5 * dimension * omega;
}

ClosedFormResult lnb_solution(int particles, double tension, double coupling, double q_phi) {
    const double c = pair_count(particles);
    positive(tension, "lambda");
    non_negative(coupling, "g");
    positive(q_phi, "q_phi");
    const double s = particles * q_phi - std::pow(c, 1.5) * coupling;
    if (s <= 0.0) return {kNaN, kNaN, SolveStatus::NoSolution};
    return {std::sqrt(s / tension), std::sqrt(4.0 * tension) * std::sqrt(s), SolveStatus::Ok};
}

ClosedFormResult closed_form(const SystemPreset& preset, double q_phi) {
    const int n = preset.particles;
    return std::visit(
        overloaded{
            [&](const WeaklyInteracting& p) {
                return wib_solution(n, preset.dimension, p.mass, p.depth, p.range, q_phi);
            },
            [&](const SelfGravitating& p) { return sgb_solution(n, p.mass, p.coupling, q_phi); },
            [&](const Confined& p) { return cb_solution(n, p.mass, p.omega, p.coupling, q_phi); },
            [&](const LargeNBaryon& p) { return lnb_solution(n, p.tension, p.coupling, q_phi); },
        },
        preset.parameters);
}

} // namespace envelope
