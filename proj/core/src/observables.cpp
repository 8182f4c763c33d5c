#include "envelope/observables.hpp"

#include "envelope/errors.hpp"

#include <cmath>
#include <numbers>

namespace envelope {

namespace {

void positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and > 0");
}

void check_dimension(int d) {
    if (d < 2) throw DomainError("dimension must be >= 2");
}

} // namespace

ScaleParams scale_params(int particles, double q_phi, double r0) {
    if (particles < 2) throw DomainError("particle count must be >= 2");
    positive(q_phi, "q_phi");
    positive(r0, "r0");
    ScaleParams out;
    out.lambdas.reserve(static_cast<std::size_t>(particles - 1));
    for (int i = 1; i < particles; ++i) {
        out.lambdas.push_back(std::sqrt(i * particles * q_phi / (i + 1.0)) / r0);
    }
    return out;
}

double pair_correlation(double lambda1, int dimension, double r) {
    positive(lambda1, "lambda1");
    check_dimension(dimension);
    if (!(r >= 0.0)) throw DomainError("r must be >= 0");
    return std::pow(lambda1, dimension) / std::pow(std::numbers::pi, 0.5 * dimension) *
           std::exp(-lambda1 * lambda1 * r * r);
}

double delta_at_origin(double lambda1, int dimension) {
    positive(lambda1, "lambda1");
    check_dimension(dimension);
    return 2.0 * std::pow(lambda1, dimension) / std::tgamma(0.5 * dimension);
}

double radial_moment(double lambda1, int dimension, int k) {
    positive(lambda1, "lambda1");
    check_dimension(dimension);
    if (k < 0) throw DomainError("moment order must be >= 0");
    if (k == 0) return 1.0;
    // Ratio through lgamma keeps large k finite.
    return std::exp(std::lgamma(0.5 * (dimension + k)) - std::lgamma(0.5 * dimension)) / std::pow(lambda1, k);
}

ObservableSet ground_state_observables(const StateSpec& state, int dimension, double q_phi, double r0,
                                       int max_moment) {
    if (!state.is_ground())
        throw DomainError("pair correlation is only available for the ground state, got " + state.to_string());
    const auto lambdas = scale_params(state.particle_count(), q_phi, r0).lambdas;
    ObservableSet out;
    out.lambda1 = lambdas.front();
    out.delta = delta_at_origin(out.lambda1, dimension);
    for (int k = 0; k <= max_moment; ++k) out.moments[k] = radial_moment(out.lambda1, dimension, k);
    return out;
}

} // namespace envelope
