#include "envelope/config.hpp"

#include "envelope/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace envelope {

namespace {

constexpr std::string_view kBlank = " \t\r";

std::size_t first_non_blank(std::string_view s, std::size_t from = 0) {
    const auto p = s.find_first_not_of(kBlank, from);
    return p == std::string_view::npos ? s.size() : p;
}

std::string_view rtrim(std::string_view s) {
    const auto p = s.find_last_not_of(kBlank);
    return p == std::string_view::npos ? std::string_view{} : s.substr(0, p + 1);
}

template <class T>
T parse_value(const ConfigEntry& e, std::string_view key) {
    T out{};
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("invalid value '" + e.value + "' for key '" + std::string(key) + "'", e.line, e.column);
    return out;
}

const ConfigEntry& required(const ConfigFile& c, std::string_view key) {
    const auto* e = c.find(key);
    if (!e) throw ConfigError("missing required key '" + std::string(key) + "'");
    return *e;
}

double required_number(const ConfigFile& c, std::string_view key) {
    return parse_value<double>(required(c, key), key);
}

TermKind potential_from(const ConfigFile& c, std::string_view slot, bool pair) {
    const auto* kind_entry = c.find(slot);
    const std::string kind = kind_entry ? kind_entry->value : "none";
    if (kind == "none") return Zero{};
    if (!pair && kind == "harmonic") return Harmonic{required_number(c, "mass"), required_number(c, "omega")};
    if (!pair && kind == "linear") return Linear{required_number(c, "tension")};
    if (pair && kind == "gaussian") return Gaussian{required_number(c, "v0"), required_number(c, "range")};
    if (pair && kind == "coulomb") return Coulomb{required_number(c, "coupling")};
    if (kind == "power") {
        const std::string prefix = pair ? "pair" : "one_body";
        return PowerLaw{required_number(c, prefix + "_coeff"), required_number(c, prefix + "_exp")};
    }
    throw ConfigError("unsupported " + std::string(slot) + " kind '" + kind + "'", kind_entry->line,
                      kind_entry->column);
}

} // namespace

ConfigFile ConfigFile::parse(std::string_view text) {
    ConfigFile out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = rtrim(line);
        const std::size_t key_start = first_non_blank(line);
        if (key_start == line.size()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no, key_start + 1);
        const std::string key(rtrim(line.substr(key_start, eq - key_start)));
        if (key.empty()) throw ConfigError("empty key", line_no, key_start + 1);
        const std::size_t value_start = first_non_blank(line, eq + 1);
        if (value_start == line.size()) throw ConfigError("missing value for key '" + key + "'", line_no, eq + 2);
        if (out.entries_.contains(key)) throw ConfigError("duplicate key '" + key + "'", line_no, key_start + 1);
        out.entries_.emplace(key, ConfigEntry{std::string(line.substr(value_start)), line_no, value_start + 1,
                                              key_start + 1});
    }
    return out;
}

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const ConfigEntry* ConfigFile::find(std::string_view key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

std::optional<double> ConfigFile::number(std::string_view key) const {
    const auto* e = find(key);
    if (!e) return std::nullopt;
    return parse_value<double>(*e, key);
}

std::optional<int> ConfigFile::integer(std::string_view key) const {
    const auto* e = find(key);
    if (!e) return std::nullopt;
    return parse_value<int>(*e, key);
}

std::optional<std::string> ConfigFile::text(std::string_view key) const {
    const auto* e = find(key);
    if (!e) return std::nullopt;
    return e->value;
}

void ConfigFile::reject_unknown(std::span<const std::string_view> allowed,
                                std::span<const std::string_view> also_allowed) const {
    for (const auto& [key, entry] : entries_) {
        const bool known = std::find(allowed.begin(), allowed.end(), key) != allowed.end() ||
                           std::find(also_allowed.begin(), also_allowed.end(), key) != also_allowed.end();
        if (!known) throw ConfigError("unknown key '" + key + "'", entry.line, entry.key_column);
    }
}

void ConfigFile::set(std::string key, std::string value) {
    entries_[std::move(key)] = ConfigEntry{std::move(value), 0, 0, 0};
}

HamiltonianSpec hamiltonian_from_config(const ConfigFile& config) {
    const int n = parse_value<int>(required(config, "n"), "n");
    const int d = config.integer("d").value_or(3);

    const auto* kin_entry = config.find("kinetic");
    const std::string kin = kin_entry ? kin_entry->value : "nonrel";
    TermKind kinetic;
    if (kin == "nonrel") {
        kinetic = NonrelativisticKinetic{required_number(config, "mass")};
    } else if (kin == "ultrarel") {
        kinetic = UltrarelativisticKinetic{};
    } else {
        throw ConfigError("kinetic must be nonrel or ultrarel, got '" + kin + "'", kin_entry->line, kin_entry->column);
    }

    try {
        return HamiltonianSpec(n, d, kinetic, potential_from(config, "one_body", false),
                               potential_from(config, "pairwise", true));
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

} // namespace envelope
