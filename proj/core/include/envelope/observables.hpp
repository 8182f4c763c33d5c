#pragma once

#include "envelope/quantum_numbers.hpp"

#include <map>
#include <vector>

namespace envelope {

/// Inverse widths lambda_1 < ... < lambda_{N-1} of the internal oscillators.
struct ScaleParams {
    std::vector<double> lambdas;
};

/// Ground-state observables derived from the Gaussian pair correlation.
struct ObservableSet {
    double lambda1 = 0.0;
    /// Radial density of the pair correlation at the origin, 2 lambda1^D / Gamma(D/2).
    double delta = 0.0;
    /// k -> <r^k> for the interparticle distance.
    std::map<int, double> moments;
};

/// lambda_i = sqrt(i N q_phi / (i + 1)) / r0 for i = 1..N-1.
ScaleParams scale_params(int particles, double q_phi, double r0);

/// lambda1^D / pi^(D/2) exp(-lambda1^2 r^2).
double pair_correlation(double lambda1, int dimension, double r);

double delta_at_origin(double lambda1, int dimension);

/// Gamma((D + k)/2) / Gamma(D/2) / lambda1^k.
double radial_moment(double lambda1, int dimension, int k);

/// lambda1, delta and <r^k> for k = 0..max_moment. Only the bosonic ground
/// state has a closed-form pair correlation; excited states are rejected
/// with DomainError.
ObservableSet ground_state_observables(const StateSpec& state, int dimension, double q_phi, double r0,
                                       int max_moment = 2);

} // namespace envelope
