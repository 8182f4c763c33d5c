#include "envelope/calibration.hpp"

#include "envelope/errors.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace envelope {

namespace {

constexpr int kGridPoints = 65;

void check_bracket(std::pair<double, double> bracket) {
    if (!(bracket.first > 0.0) || !(bracket.second > bracket.first) || !std::isfinite(bracket.second))
        throw DomainError("phi bracket must satisfy 0 < lo < hi");
}

void check_state(const SystemPreset& preset, const StateSpec& state) {
    if (state.particle_count() != preset.particles)
        throw DomainError("state '" + state.to_string() + "' does not describe " + std::to_string(preset.particles) +
                          " particles");
}

double ok_energy(const SystemPreset& preset, const StateSpec& state, double phi) {
    const auto r = preset_energy(preset, state, phi);
    if (r.status != SolveStatus::Ok)
        throw InfeasibleError(std::string(preset.name()) + ": no usable ET energy at phi = " + std::to_string(phi) +
                              " (" + std::string(to_string(r.status)) + ")");
    return r.energy;
}

std::vector<double> grid(std::pair<double, double> bracket) {
    std::vector<double> out(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i)
        out[static_cast<std::size_t>(i)] =
            bracket.first + (bracket.second - bracket.first) * i / static_cast<double>(kGridPoints - 1);
    return out;
}

} // namespace

double mean_relative_error(std::span<const double> approx, std::span<const double> exact) {
    if (approx.empty() || approx.size() != exact.size())
        throw DomainError("mean_relative_error needs two non-empty lists of equal length");
    double sum = 0.0;
    for (std::size_t i = 0; i < approx.size(); ++i) {
        if (exact[i] == 0.0) throw DomainError("mean_relative_error: exact value is zero");
        sum += std::abs(approx[i] - exact[i]) / std::abs(exact[i]);
    }
    return sum / static_cast<double>(approx.size());
}

ClosedFormResult preset_energy(const SystemPreset& preset, const StateSpec& state, double phi) {
    check_state(preset, state);
    return closed_form(preset, global_q_phi(state, preset.dimension, phi));
}

FitResult fit_phi(const SystemPreset& preset, const StateSpec& state, double e_ref, std::pair<double, double> bracket) {
    check_bracket(bracket);
    check_state(preset, state);

    const auto phis = grid(bracket);
    std::vector<double> energies;
    energies.reserve(phis.size());
    for (double phi : phis) energies.push_back(ok_energy(preset, state, phi));
    const bool rising = energies.back() > energies.front();
    for (std::size_t i = 1; i < energies.size(); ++i) {
        if ((energies[i] > energies[i - 1]) != rising || energies[i] == energies[i - 1])
            throw InfeasibleError("E(phi) is not strictly monotone near phi = " + std::to_string(phis[i]));
    }

    auto target = [&](double phi) { return ok_energy(preset, state, phi) - e_ref; };
    const double flo = energies.front() - e_ref;
    const double fhi = energies.back() - e_ref;
    FitResult out;
    out.bracket = bracket;
    if (flo == 0.0 || fhi == 0.0) {
        out.phi = flo == 0.0 ? bracket.first : bracket.second;
        return out;
    }
    if ((flo < 0.0) == (fhi < 0.0))
        throw NoBracketError("E(phi) - e_ref does not change sign on [" + std::to_string(bracket.first) + ", " +
                             std::to_string(bracket.second) + "]");

    std::uintmax_t max_iter = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(target, bracket.first, bracket.second, flo, fhi,
                                                          boost::math::tools::eps_tolerance<double>(50), max_iter);
    out.phi = 0.5 * (a + b);
    out.residual = target(out.phi);
    out.iterations = static_cast<int>(max_iter);
    return out;
}

FitResult fit_phi_dataset(const SystemPreset& preset, std::span<const ReferencePoint> records,
                          std::pair<double, double> bracket) {
    check_bracket(bracket);
    if (records.empty()) throw DomainError("fit_phi_dataset needs at least one record");
    std::vector<double> exact;
    exact.reserve(records.size());
    for (const auto& rec : records) {
        check_state(preset, rec.state);
        exact.push_back(rec.energy);
    }

    std::vector<double> approx(records.size());
    auto objective = [&](double phi) {
        for (std::size_t i = 0; i < records.size(); ++i) approx[i] = ok_energy(preset, records[i].state, phi);
        return mean_relative_error(approx, exact);
    };

    const auto phis = grid(bracket);
    std::vector<double> values;
    values.reserve(phis.size());
    for (double phi : phis) values.push_back(objective(phi));

    int local_minima = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const bool left = i == 0 || values[i] < values[i - 1];
        const bool right = i + 1 == values.size() || values[i] <= values[i + 1];
        if (left && right) ++local_minima;
    }
    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());

    double a = phis[best == 0 ? 0 : best - 1];
    double b = phis[std::min(best + 1, phis.size() - 1)];
    const double inv_golden = std::numbers::phi - 1.0;
    double c = b - inv_golden * (b - a);
    double d = a + inv_golden * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    int iterations = 0;
    while (b - a > 1e-7 && iterations < 200) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_golden * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_golden * (b - a);
            fd = objective(d);
        }
        ++iterations;
    }

    FitResult out;
    out.phi = 0.5 * (a + b);
    out.residual = objective(out.phi);
    // The grid point itself may beat the interior estimate when the minimum sits on the bracket edge.
    if (values[best] < out.residual) {
        out.phi = phis[best];
        out.residual = values[best];
    }
    out.iterations = iterations;
    out.bracket = bracket;
    out.unimodal = local_minima <= 1;
    return out;
}

} // namespace envelope
