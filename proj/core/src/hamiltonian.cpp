#include "envelope/hamiltonian.hpp"

#include "envelope/errors.hpp"

#include <cmath>
#include <sstream>

namespace envelope {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and > 0");
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

void check_argument(double x) {
    if (!(x >= 0.0)) throw DomainError("term argument must be >= 0");
}

[[noreturn]] void singular(const char* kind) {
    throw SingularityError(std::string(kind) + " term is singular at the origin");
}

} // namespace

bool is_kinetic(const TermKind& term) noexcept {
    return std::holds_alternative<NonrelativisticKinetic>(term) ||
           std::holds_alternative<UltrarelativisticKinetic>(term);
}

void validate_term(const TermKind& term) {
    std::visit(overloaded{
                   [](const NonrelativisticKinetic& t) { require_positive(t.mass, "kinetic mass"); },
                   [](const UltrarelativisticKinetic&) {},
                   [](const Gaussian& t) {
                       require_positive(t.depth, "gaussian depth");
                       require_positive(t.range, "gaussian range");
                   },
                   [](const Coulomb& t) { require_finite(t.coupling, "coulomb coupling"); },
                   [](const Linear& t) { require_positive(t.tension, "linear tension"); },
                   [](const Harmonic& t) {
                       require_positive(t.mass, "harmonic mass");
                       require_positive(t.omega, "harmonic omega");
                   },
                   [](const PowerLaw& t) {
                       require_finite(t.coefficient, "power-law coefficient");
                       require_finite(t.exponent, "power-law exponent");
                   },
                   [](const Zero&) {},
               },
               term);
}

double term_value(const TermKind& term, double x) {
    check_argument(x);
    return std::visit(overloaded{
                          [x](const NonrelativisticKinetic& t) { return x * x / (2.0 * t.mass); },
                          [x](const UltrarelativisticKinetic&) { return x; },
                          [x](const Gaussian& t) {
                              const double u = x / t.range;
                              return -t.depth * std::exp(-u * u);
                          },
                          [x](const Coulomb& t) {
                              if (x == 0.0) {
                                  if (t.coupling == 0.0) return 0.0;
                                  singular("coulomb");
                              }
                              return t.coupling / x;
                          },
                          [x](const Linear& t) { return t.tension * x; },
                          [x](const Harmonic& t) { return 0.5 * t.mass * t.omega * t.omega * x * x; },
                          [x](const PowerLaw& t) {
                              if (x == 0.0 && t.exponent < 0.0 && t.coefficient != 0.0) singular("power-law");
                              return t.coefficient * std::pow(x, t.exponent);
                          },
                          [](const Zero&) { return 0.0; },
                      },
                      term);
}

double term_derivative(const TermKind& term, double x) {
    check_argument(x);
    return std::visit(overloaded{
                          [x](const NonrelativisticKinetic& t) { return x / t.mass; },
                          [](const UltrarelativisticKinetic&) { return 1.0; },
                          [x](const Gaussian& t) {
                              const double u = x / t.range;
                              return 2.0 * t.depth * x / (t.range * t.range) * std::exp(-u * u);
                          },
                          [x](const Coulomb& t) {
                              if (x == 0.0) {
                                  if (t.coupling == 0.0) return 0.0;
                                  singular("coulomb");
                              }
                              return -t.coupling / (x * x);
                          },
                          [](const Linear& t) { return t.tension; },
                          [x](const Harmonic& t) { return t.mass * t.omega * t.omega * x; },
                          [x](const PowerLaw& t) {
                              if (t.coefficient == 0.0 || t.exponent == 0.0) return 0.0;
                              if (x == 0.0 && t.exponent < 1.0) singular("power-law");
                              return t.coefficient * t.exponent * std::pow(x, t.exponent - 1.0);
                          },
                          [](const Zero&) { return 0.0; },
                      },
                      term);
}

double term_second_derivative(const TermKind& term, double x) {
    check_argument(x);
    return std::visit(overloaded{
                          [](const NonrelativisticKinetic& t) { return 1.0 / t.mass; },
                          [](const UltrarelativisticKinetic&) { return 0.0; },
                          [x](const Gaussian& t) {
                              const double r2 = t.range * t.range;
                              return 2.0 * t.depth / r2 * (1.0 - 2.0 * x * x / r2) * std::exp(-x * x / r2);
                          },
                          [x](const Coulomb& t) {
                              if (x == 0.0) {
                                  if (t.coupling == 0.0) return 0.0;
                                  singular("coulomb");
                              }
                              return 2.0 * t.coupling / (x * x * x);
                          },
                          [](const Linear&) { return 0.0; },
                          [](const Harmonic& t) { return t.mass * t.omega * t.omega; },
                          [x](const PowerLaw& t) {
                              const double c = t.coefficient * t.exponent * (t.exponent - 1.0);
                              if (c == 0.0) return 0.0;
                              if (x == 0.0 && t.exponent < 2.0) singular("power-law");
                              return c * std::pow(x, t.exponent - 2.0);
                          },
                          [](const Zero&) { return 0.0; },
                      },
                      term);
}

bool is_attractive(const TermKind& term) noexcept {
    return std::visit(overloaded{
                          [](const Gaussian&) { return true; },
                          [](const Coulomb& t) { return t.coupling < 0.0; },
                          [](const PowerLaw& t) { return t.coefficient * t.exponent > 0.0; },
                          [](const Linear&) { return true; },
                          [](const Harmonic&) { return true; },
                          [](const auto&) { return false; },
                      },
                      term);
}

std::string describe(const TermKind& term) {
    std::ostringstream os;
    os.precision(9);
    std::visit(overloaded{
                   [&](const NonrelativisticKinetic& t) { os << "nonrel(mass=" << t.mass << ")"; },
                   [&](const UltrarelativisticKinetic&) { os << "ultrarel"; },
                   [&](const Gaussian& t) { os << "gaussian(v0=" << t.depth << ", range=" << t.range << ")"; },
                   [&](const Coulomb& t) { os << "coulomb(coupling=" << t.coupling << ")"; },
                   [&](const Linear& t) { os << "linear(tension=" << t.tension << ")"; },
                   [&](const Harmonic& t) { os << "harmonic(mass=" << t.mass << ", omega=" << t.omega << ")"; },
                   [&](const PowerLaw& t) { os << "power(coeff=" << t.coefficient << ", exp=" << t.exponent << ")"; },
                   [&](const Zero&) { os << "none"; },
               },
               term);
    return os.str();
}

HamiltonianSpec::HamiltonianSpec(int particles, int dimension, TermKind kinetic, TermKind one_body,
                                 TermKind pairwise)
    : particles_(particles),
      dimension_(dimension),
      kinetic_(std::move(kinetic)),
      one_body_(std::move(one_body)),
      pairwise_(std::move(pairwise)) {
    if (particles_ < 2) throw DomainError("particle count must be >= 2");
    if (dimension_ < 2) throw DomainError("dimension must be >= 2");
    if (!is_kinetic(kinetic_)) throw DomainError("kinetic slot needs a kinetic kind, got " + describe(kinetic_));
    if (is_kinetic(one_body_)) throw DomainError("one-body slot cannot hold a kinetic kind");
    if (is_kinetic(pairwise_)) throw DomainError("pairwise slot cannot hold a kinetic kind");
    validate_term(kinetic_);
    validate_term(one_body_);
    validate_term(pairwise_);
}

HamiltonianSpec HamiltonianSpec::with_particles(int particles) const {
    return HamiltonianSpec(particles, dimension_, kinetic_, one_body_, pairwise_);
}

} // namespace envelope
