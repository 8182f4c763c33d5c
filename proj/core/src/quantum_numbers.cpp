#include "envelope/quantum_numbers.hpp"

#include "envelope/errors.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

namespace envelope {

namespace {

void check_dimension(int dimension) {
    if (dimension < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(dimension));
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, std::string_view whole) {
    token = trim(token);
    int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end)
        throw DomainError("malformed state '" + std::string(whole) + "': bad integer '" + std::string(token) + "'");
    return value;
}

} // namespace

StateSpec::StateSpec(std::vector<OscillatorLevel> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw DomainError("a state needs at least one internal oscillator (N >= 2)");
    for (const auto& level : levels_) {
        if (level.n < 0 || level.l < 0) throw DomainError("quantum numbers must be non-negative");
    }
}

StateSpec StateSpec::ground(int particles) {
    if (particles < 2) throw DomainError("particle count must be >= 2, got " + std::to_string(particles));
    return StateSpec(std::vector<OscillatorLevel>(static_cast<std::size_t>(particles - 1)));
}

StateSpec StateSpec::parse(std::string_view text) {
    std::vector<OscillatorLevel> levels;
    std::string_view rest = text;
    while (true) {
        const auto semi = rest.find(';');
        const auto item = rest.substr(0, semi);
        const auto comma = item.find(',');
        if (comma == std::string_view::npos)
            throw DomainError("malformed state '" + std::string(text) + "': expected 'n,l'");
        levels.push_back({parse_int(item.substr(0, comma), text), parse_int(item.substr(comma + 1), text)});
        if (semi == std::string_view::npos) break;
        rest = rest.substr(semi + 1);
    }
    return StateSpec(std::move(levels));
}

int StateSpec::radial_sum() const noexcept {
    return std::accumulate(levels_.begin(), levels_.end(), 0,
                           [](int acc, const OscillatorLevel& lv) { return acc + lv.n; });
}

int StateSpec::orbital_sum() const noexcept {
    return std::accumulate(levels_.begin(), levels_.end(), 0,
                           [](int acc, const OscillatorLevel& lv) { return acc + lv.l; });
}

std::string StateSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (i != 0) out += ';';
        out += std::to_string(levels_[i].n) + ',' + std::to_string(levels_[i].l);
    }
    return out;
}

double GlobalQuantumTerms::value(double phi) const noexcept {
    return phi * radial + orbital + oscillators * (dimension + phi - 2.0) / 2.0;
}

GlobalQuantumTerms global_terms(const StateSpec& state, int dimension) {
    check_dimension(dimension);
    return {state.radial_sum(), state.orbital_sum(), state.particle_count() - 1, dimension};
}

double global_q(const StateSpec& state, int dimension) {
    const auto t = global_terms(state, dimension);
    return 2.0 * t.radial + t.orbital + t.oscillators * t.dimension / 2.0;
}

double global_q_phi(const StateSpec& state, int dimension, double phi) {
    if (!(phi > 0.0) || !std::isfinite(phi)) throw DomainError("phi must be a finite positive number");
    return global_terms(state, dimension).value(phi);
}

int parity(const StateSpec& state) noexcept {
    return state.orbital_sum() % 2 == 0 ? 1 : -1;
}

int pair_count(int particles) {
    if (particles < 2) throw DomainError("particle count must be >= 2, got " + std::to_string(particles));
    return particles * (particles - 1) / 2;
}

} // namespace envelope
