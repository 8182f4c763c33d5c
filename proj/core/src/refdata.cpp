#include "envelope/refdata.hpp"

#include "envelope/errors.hpp"

#include <cstdio>

namespace envelope {

namespace {

constexpr std::array<ReferenceRecord, 16> kTable1 = {{
    {0, 0, 2.128, 2.468, 2.165, 2.128, 2.060},
    {0, 1, 2.606, 2.914, 2.662, 2.633, 2.578},
    {1, 0, 2.739, 3.300, 2.842, 2.788, 2.682},
    {0, 2, 2.959, 3.300, 3.080, 3.055, 3.007},
    {1, 1, 3.125, 3.646, 3.237, 3.189, 3.098},
    {0, 3, 3.299, 3.646, 3.448, 3.425, 3.383},
    {2, 0, 3.260, 3.961, 3.387, 3.318, 3.186},
    {1, 2, 3.422, 3.961, 3.589, 3.546, 3.463},
    {0, 4, 3.581, 3.961, 3.780, 3.759, 3.721},
    {2, 1, 3.584, 4.253, 3.725, 3.662, 3.542},
    {1, 3, 3.716, 4.253, 3.909, 3.869, 3.794},
    {0, 5, 3.861, 4.253, 4.085, 4.066, 4.030},
    {3, 0, 3.721, 4.527, 3.856, 3.775, 3.619},
    {2, 2, 3.838, 4.527, 4.034, 3.976, 3.866},
    {1, 4, 3.966, 4.527, 4.205, 4.168, 4.098},
    {0, 6, 4.103, 4.527, 4.369, 4.351, 4.318},
}};

} // namespace

std::span<const ReferenceRecord, 16> table1() noexcept { return kTable1; }

double et_column(const ReferenceRecord& record, std::size_t column) {
    switch (column) {
    case 0: return record.et_phi2;
    case 1: return record.et_phi_sqrt2;
    case 2: return record.et_phi135;
    case 3: return record.et_phi123;
    default: throw DomainError("ET column index must be 0..3");
    }
}

StateSpec state_from_record(const ReferenceRecord& record) {
    return StateSpec({{record.n_sum, record.l_sum}, {0, 0}});
}

std::string table1_csv() {
    std::string out = "n_sum,l_sum,exact,phi2,phi_sqrt2,phi135,phi123\n";
    char line[128];
    for (const auto& r : kTable1) {
        std::snprintf(line, sizeof line, "%d,%d,%.3f,%.3f,%.3f,%.3f,%.3f\n", r.n_sum, r.l_sum, r.exact, r.et_phi2,
                      r.et_phi_sqrt2, r.et_phi135, r.et_phi123);
        out += line;
    }
    return out;
}

SystemPreset wib_preset(int particles) {
    return {WeaklyInteracting{1.0 / kWibInverseMass, kWibDepth, kWibRange}, particles, 3, "K"};
}

SystemPreset sgb_preset(int particles) { return {SelfGravitating{1.0, 1.0}, particles, 3, "natural"}; }

SystemPreset cb_preset(int particles) { return {Confined{1.0, 0.5, 1.0}, particles, 3, "natural"}; }

SystemPreset lnb_preset(int particles) {
    return {LargeNBaryon{kLnbTension, 2.0 / 3.0 * kLnbAlphaS}, particles, 3, "GeV"};
}

SystemPreset preset_by_name(std::string_view name, int particles) {
    if (name == "wib") return wib_preset(particles);
    if (name == "sgb") return sgb_preset(particles);
    if (name == "cb") return cb_preset(particles);
    if (name == "lnb") return lnb_preset(particles);
    throw DomainError("unknown preset '" + std::string(name) + "' (expected wib, sgb, cb or lnb)");
}

} // namespace envelope
