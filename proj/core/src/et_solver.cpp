#include "envelope/et_solver.hpp"

#include "envelope/errors.hpp"
#include "envelope/quantum_numbers.hpp"
#include "safeguarded_newton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace envelope {

namespace {

constexpr double kScanDecades = 8.0;
constexpr int kPointsPerDecade = 24;

struct Scaling {
    double coefficient;
    double exponent;
};

void check_q(double q_phi) {
    if (!(q_phi > 0.0) || !std::isfinite(q_phi)) throw DomainError("q_phi must be finite and > 0");
}

double checked(double value, double r0, const char* what) {
    if (!std::isfinite(value)) throw NumericError(std::string(what) + " is not finite", r0);
    return value;
}

// Power-law form c r^e of the kinetic side of the stationarity condition.
Scaling kinetic_scaling(const HamiltonianSpec& h, double q_phi) {
    const double n = h.particles();
    if (const auto* t = std::get_if<NonrelativisticKinetic>(&h.kinetic()))
        return {n * q_phi * q_phi / t->mass, -2.0};
    return {n * q_phi, -1.0};
}

// Same for r U'(r / a) (a = N) or a r V'(r / a) (a = sqrt(C_N)); `weight` is 1 or a.
// Returns a direct length for kinds that carry one (Gaussian).
std::optional<double> balance_length(const TermKind& term, double a, double weight, Scaling kin) {
    std::optional<Scaling> pot;
    if (const auto* t = std::get_if<Gaussian>(&term)) return a * t->range;
    if (const auto* t = std::get_if<Harmonic>(&term)) pot = Scaling{weight * t->mass * t->omega * t->omega / a, 2.0};
    if (const auto* t = std::get_if<Linear>(&term)) pot = Scaling{weight * t->tension, 1.0};
    if (const auto* t = std::get_if<Coulomb>(&term)) pot = Scaling{weight * std::abs(t->coupling) * a * a, -1.0};
    if (const auto* t = std::get_if<PowerLaw>(&term))
        pot = Scaling{weight * std::abs(t->coefficient * t->exponent) * std::pow(a, 1.0 - t->exponent), t->exponent};
    if (!pot || !(pot->coefficient > 0.0) || pot->exponent == kin.exponent) return std::nullopt;
    const double length = std::pow(kin.coefficient / pot->coefficient, 1.0 / (pot->exponent - kin.exponent));
    if (!std::isfinite(length) || !(length > 0.0)) return std::nullopt;
    return length;
}

double residual_derivative(const HamiltonianSpec& h, double q_phi, double r0) {
    const double n = h.particles();
    const double sqrt_c = std::sqrt(static_cast<double>(pair_count(h.particles())));
    const double p0 = q_phi / r0;
    const double s = r0 / n;
    const double t = r0 / sqrt_c;
    const double dkin = -n * (term_derivative(h.kinetic(), p0) + p0 * term_second_derivative(h.kinetic(), p0)) * p0 / r0;
    const double done = term_derivative(h.one_body(), s) + s * term_second_derivative(h.one_body(), s);
    const double dpair = sqrt_c * term_derivative(h.pairwise(), t) + r0 * term_second_derivative(h.pairwise(), t);
    return dkin - done - dpair;
}

struct Candidate {
    double r0;
    double energy;
};

Candidate refine(const HamiltonianSpec& h, double q_phi, double lo, double hi) {
    auto fdf = [&](double r) {
        return std::pair{checked(residual(h, q_phi, r), r, "residual"),
                         checked(residual_derivative(h, q_phi, r), r, "residual derivative")};
    };
    const double r0 = detail::safeguarded_newton(fdf, lo, hi, 1e-15).root;
    return {r0, checked(et_energy(h, q_phi, r0), r0, "energy")};
}

std::vector<std::pair<double, double>> scan_sign_changes(const HamiltonianSpec& h, double q_phi, double length) {
    const int points = static_cast<int>(2.0 * kScanDecades) * kPointsPerDecade + 1;
    std::vector<std::pair<double, double>> brackets;
    double prev_r = 0.0;
    double prev_f = 0.0;
    for (int k = 0; k < points; ++k) {
        const double r = length * std::pow(10.0, -kScanDecades + static_cast<double>(k) / kPointsPerDecade);
        const double f = checked(residual(h, q_phi, r), r, "residual");
        if (k > 0) {
            if (f == 0.0) {
                brackets.emplace_back(r, r);
            } else if (prev_f != 0.0 && (prev_f < 0.0) != (f < 0.0)) {
                brackets.emplace_back(prev_r, r);
            }
        }
        prev_r = r;
        prev_f = f;
    }
    return brackets;
}

std::optional<std::pair<double, double>> expand_hint(const HamiltonianSpec& h, double q_phi,
                                                     std::pair<double, double> hint) {
    auto [lo, hi] = hint;
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) throw DomainError("bracket hint must satisfy 0 < lo < hi");
    for (int i = 0; i < 60; ++i) {
        const double flo = checked(residual(h, q_phi, lo), lo, "residual");
        const double fhi = checked(residual(h, q_phi, hi), hi, "residual");
        if (flo == 0.0 || fhi == 0.0 || (flo < 0.0) != (fhi < 0.0)) return std::pair{lo, hi};
        lo *= 0.5;
        hi *= 2.0;
    }
    return std::nullopt;
}

} // namespace

std::string_view to_string(BoundTag tag) noexcept {
    switch (tag) {
    case BoundTag::UpperBound: return "UpperBound";
    case BoundTag::LowerBound: return "LowerBound";
    case BoundTag::Unknown: break;
    }
    return "Unknown";
}

std::string_view to_string(SolveStatus status) noexcept {
    switch (status) {
    case SolveStatus::Ok: return "Ok";
    case SolveStatus::Irrelevant: return "Irrelevant";
    case SolveStatus::NoSolution: break;
    }
    return "NoSolution";
}

double et_energy(const HamiltonianSpec& h, double q_phi, double r0) {
    check_q(q_phi);
    if (!(r0 > 0.0)) throw DomainError("r0 must be > 0");
    const double n = h.particles();
    const double c = pair_count(h.particles());
    const double p0 = q_phi / r0;
    return n * term_value(h.kinetic(), p0) + n * term_value(h.one_body(), r0 / n) +
           c * term_value(h.pairwise(), r0 / std::sqrt(c));
}

double residual(const HamiltonianSpec& h, double q_phi, double r0) {
    check_q(q_phi);
    if (!(r0 > 0.0)) throw DomainError("r0 must be > 0");
    const double n = h.particles();
    const double sqrt_c = std::sqrt(static_cast<double>(pair_count(h.particles())));
    const double p0 = q_phi / r0;
    return n * p0 * term_derivative(h.kinetic(), p0) - r0 * term_derivative(h.one_body(), r0 / n) -
           sqrt_c * r0 * term_derivative(h.pairwise(), r0 / sqrt_c);
}

double characteristic_length(const HamiltonianSpec& h, double q_phi) {
    check_q(q_phi);
    const double n = h.particles();
    const double sqrt_c = std::sqrt(static_cast<double>(pair_count(h.particles())));
    const Scaling kin = kinetic_scaling(h, q_phi);

    double log_sum = 0.0;
    int count = 0;
    for (const auto& length : {balance_length(h.one_body(), n, 1.0, kin), balance_length(h.pairwise(), sqrt_c, sqrt_c, kin)}) {
        if (length) {
            log_sum += std::log(*length);
            ++count;
        }
    }
    return count == 0 ? 1.0 : std::exp(log_sum / count);
}

BoundTag bound_direction(const HamiltonianSpec& h, double phi) {
    if (phi != 2.0) return BoundTag::Unknown;
    const bool nonrel = std::holds_alternative<NonrelativisticKinetic>(h.kinetic());
    const bool ultrarel = std::holds_alternative<UltrarelativisticKinetic>(h.kinetic());
    const auto* coulomb = std::get_if<Coulomb>(&h.pairwise());
    const auto& u = h.one_body();

    if (nonrel && std::holds_alternative<Zero>(u)) {
        if (std::holds_alternative<Gaussian>(h.pairwise())) return BoundTag::UpperBound;
        if (coulomb && coulomb->coupling < 0.0) return BoundTag::UpperBound;
    }
    if (nonrel && std::holds_alternative<Harmonic>(u) && coulomb && coulomb->coupling >= 0.0)
        return BoundTag::LowerBound;
    if (ultrarel && std::holds_alternative<Linear>(u) && coulomb && coulomb->coupling <= 0.0)
        return BoundTag::UpperBound;
    return BoundTag::Unknown;
}

bool binds_below_zero(const HamiltonianSpec& h) noexcept {
    if (!std::holds_alternative<Zero>(h.one_body())) return false;
    const auto& v = h.pairwise();
    if (std::holds_alternative<Gaussian>(v)) return true;
    if (const auto* c = std::get_if<Coulomb>(&v)) return c->coupling < 0.0;
    if (const auto* p = std::get_if<PowerLaw>(&v)) return p->coefficient < 0.0 && p->exponent < 0.0;
    return false;
}

EtSolution solve(const HamiltonianSpec& h, double q_phi, const SolveOptions& options) {
    check_q(q_phi);
    EtSolution out;
    out.q_phi = q_phi;
    out.bound = bound_direction(h, options.phi);
    out.energy = std::numeric_limits<double>::quiet_NaN();
    out.r0 = std::numeric_limits<double>::quiet_NaN();
    out.p0 = std::numeric_limits<double>::quiet_NaN();

    std::vector<std::pair<double, double>> brackets;
    if (options.bracket_hint) {
        if (auto found = expand_hint(h, q_phi, *options.bracket_hint)) brackets.push_back(*found);
    }
    if (brackets.empty()) brackets = scan_sign_changes(h, q_phi, characteristic_length(h, q_phi));
    if (brackets.empty()) return out;

    std::optional<Candidate> best;
    for (const auto& [lo, hi] : brackets) {
        const Candidate c = lo == hi ? Candidate{lo, checked(et_energy(h, q_phi, lo), lo, "energy")}
                                     : refine(h, q_phi, lo, hi);
        if (!best || c.energy < best->energy) best = c;
    }

    out.roots_found = static_cast<int>(brackets.size());
    out.r0 = best->r0;
    out.p0 = q_phi / best->r0;
    out.energy = best->energy;
    out.status = binds_below_zero(h) && out.energy >= 0.0 ? SolveStatus::Irrelevant : SolveStatus::Ok;
    return out;
}

} // namespace envelope
