#pragma once

#include "envelope/hamiltonian.hpp"

#include <cstddef>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace envelope {

/// A value from a config file and the 1-based position where it starts.
struct ConfigEntry {
    std::string value;
    std::size_t line = 0;
    std::size_t column = 0;
    /// Position of the key itself, for unknown-key diagnostics.
    std::size_t key_column = 0;
};

/// Flat `key = value` text: one pair per line, `#` starts a comment, blank
/// lines are ignored, duplicate keys are an error.
class ConfigFile {
public:
    static ConfigFile parse(std::string_view text);
    static ConfigFile load(const std::string& path);

    const ConfigEntry* find(std::string_view key) const;
    bool contains(std::string_view key) const { return find(key) != nullptr; }
    const std::map<std::string, ConfigEntry, std::less<>>& entries() const noexcept { return entries_; }

    std::optional<double> number(std::string_view key) const;
    std::optional<int> integer(std::string_view key) const;
    std::optional<std::string> text(std::string_view key) const;

    /// ConfigError at the key position of the first entry not in `allowed`.
    void reject_unknown(std::span<const std::string_view> allowed,
                        std::span<const std::string_view> also_allowed = {}) const;

    void set(std::string key, std::string value);

private:
    std::map<std::string, ConfigEntry, std::less<>> entries_;
};

/// Keys understood by hamiltonian_from_config.
inline constexpr std::array<std::string_view, 15> kHamiltonianKeys = {
    "n", "d", "kinetic", "mass", "one_body", "omega", "tension", "one_body_coeff", "one_body_exp",
    "pairwise", "v0", "range", "coupling", "pair_coeff", "pair_exp"};

/// Builds a Hamiltonian from config keys:
///   n, d (default 3), kinetic = nonrel|ultrarel with mass,
///   one_body = none|harmonic|linear|power with omega | tension | one_body_coeff, one_body_exp,
///   pairwise = none|gaussian|coulomb|power with v0, range | coupling (signed, g/r) | pair_coeff, pair_exp.
/// Harmonic confinement uses the kinetic mass. Unknown keys are not checked
/// here; call ConfigFile::reject_unknown first.
HamiltonianSpec hamiltonian_from_config(const ConfigFile& config);

} // namespace envelope
