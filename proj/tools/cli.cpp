#include "cli.hpp"

#include "envelope/calibration.hpp"
#include "envelope/closed_forms.hpp"
#include "envelope/config.hpp"
#include "envelope/errors.hpp"
#include "envelope/et_solver.hpp"
#include "envelope/observables.hpp"
#include "envelope/quantum_numbers.hpp"
#include "envelope/refdata.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace envelope::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::string_view kCsvHeader = "N,Q_phi,E,r0,p0,lambda1,mean_r,delta,bound,status";

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double parse_number(std::string_view text, std::string_view what) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw UsageError(std::string(what) + ": not a number: '" + std::string(text) + "'");
    return v;
}

struct Options {
    std::string config_path;
    std::string preset;
    int n = 0;
    double phi = 2.0;
    std::string state;
    bool observables = false;
    bool add_cm = false;
    std::string output;
    std::string format;
    std::vector<std::string> sets;
    std::vector<double> bracket;
    std::string method;
    int n_min = 2;
    int n_max = 8;
    double target = 0.0;
    std::string references;
    std::string target_name;

    bool n_given = false;
    bool target_given = false;
};

// The physical system of a run: either a named preset or a Hamiltonian read from a config file.
struct System {
    std::optional<SystemPreset> preset;
    std::optional<ConfigFile> config;
    std::string units;

    int dimension() const {
        if (preset) return preset->dimension;
        return config->integer("d").value_or(3);
    }

    HamiltonianSpec hamiltonian(int particles) const {
        if (preset) return preset->with_particles(particles).hamiltonian();
        ConfigFile c = *config;
        c.set("n", std::to_string(particles));
        return hamiltonian_from_config(c);
    }

    std::string label() const { return preset ? std::string(preset->name()) : std::string("config"); }
};

std::vector<std::pair<std::string, std::string>> split_sets(const std::vector<std::string>& sets) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
            throw UsageError("--set expects key=value, got '" + s + "'");
        out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    return out;
}

SystemPreset override_preset(SystemPreset preset, const std::vector<std::pair<std::string, std::string>>& sets) {
    for (const auto& [key, value] : sets) {
        const double v = parse_number(value, "--set " + key);
        if (key == "d") {
            if (v != std::floor(v)) throw UsageError("--set d must be an integer");
            preset.dimension = static_cast<int>(v);
            continue;
        }
        double* slot = std::visit(overloaded{
                                      [&](WeaklyInteracting& p) -> double* {
                                          if (key == "mass") return &p.mass;
                                          if (key == "v0") return &p.depth;
                                          if (key == "range") return &p.range;
                                          return nullptr;
                                      },
                                      [&](SelfGravitating& p) -> double* {
                                          if (key == "mass") return &p.mass;
                                          if (key == "coupling") return &p.coupling;
                                          return nullptr;
                                      },
                                      [&](Confined& p) -> double* {
                                          if (key == "mass") return &p.mass;
                                          if (key == "omega") return &p.omega;
                                          if (key == "coupling") return &p.coupling;
                                          return nullptr;
                                      },
                                      [&](LargeNBaryon& p) -> double* {
                                          if (key == "tension") return &p.tension;
                                          if (key == "coupling") return &p.coupling;
                                          return nullptr;
                                      },
                                  },
                                  preset.parameters);
        if (!slot) throw UsageError("--set: preset " + std::string(preset.name()) + " has no parameter '" + key + "'");
        *slot = v;
    }
    return preset;
}

System load_system(const Options& o) {
    if (o.config_path.empty() == o.preset.empty()) throw UsageError("give exactly one of --config and --preset");
    System sys;
    const auto sets = split_sets(o.sets);
    if (!o.preset.empty()) {
        sys.preset = override_preset(preset_by_name(o.preset, o.preset == "lnb" ? 3 : 2), sets);
        sys.units = sys.preset->units;
        return sys;
    }
    auto config = ConfigFile::load(o.config_path);
    config.reject_unknown(kHamiltonianKeys);
    for (const auto& [key, value] : sets) {
        if (std::find(kHamiltonianKeys.begin(), kHamiltonianKeys.end(), key) == kHamiltonianKeys.end())
            throw UsageError("--set: unknown key '" + key + "'");
        config.set(key, value);
    }
    sys.config = std::move(config);
    return sys;
}

StateSpec resolve_state(const System& sys, const Options& o) {
    if (!o.state.empty()) {
        auto state = StateSpec::parse(o.state);
        if (o.n_given && state.particle_count() != o.n)
            throw UsageError("--state describes " + std::to_string(state.particle_count()) + " particles but --n is " +
                             std::to_string(o.n));
        return state;
    }
    if (o.n_given) return StateSpec::ground(o.n);
    if (sys.preset) return StateSpec::ground(sys.preset->particles);
    const auto n = sys.config->integer("n");
    if (!n) throw ConfigError("missing key 'n'");
    return StateSpec::ground(*n);
}

struct Outcome {
    int particles = 0;
    double q_phi = kNaN;
    double energy = kNaN;
    double r0 = kNaN;
    double p0 = kNaN;
    BoundTag bound = BoundTag::Unknown;
    SolveStatus status = SolveStatus::NoSolution;
    std::optional<ObservableSet> observables;
};

bool use_closed_form(const System& sys, const Options& o) {
    if (o.method.empty()) return sys.preset.has_value();
    if (o.method == "closed" && !sys.preset) throw UsageError("--method closed needs --preset");
    return o.method == "closed";
}

Outcome evaluate(const System& sys, const StateSpec& state, const Options& o, bool want_observables) {
    Outcome out;
    out.particles = state.particle_count();
    const int dim = sys.dimension();
    const auto h = sys.hamiltonian(out.particles);
    out.q_phi = global_q_phi(state, dim, o.phi);
    out.bound = bound_direction(h, o.phi);

    if (use_closed_form(sys, o)) {
        const auto r = closed_form(sys.preset->with_particles(out.particles), out.q_phi);
        out.status = r.status;
        out.energy = r.energy;
        out.r0 = r.r0;
    } else {
        SolveOptions so;
        so.phi = o.phi;
        if (!o.bracket.empty()) so.bracket_hint = std::pair{o.bracket[0], o.bracket[1]};
        const auto r = solve(h, out.q_phi, so);
        out.status = r.status;
        out.energy = r.energy;
        out.r0 = r.r0;
        out.bound = r.bound;
    }
    if (out.status == SolveStatus::NoSolution) {
        out.energy = out.r0 = kNaN;
        return out;
    }
    out.p0 = out.q_phi / out.r0;

    if (o.add_cm) {
        const auto* harmonic = std::get_if<Harmonic>(&h.one_body());
        if (!harmonic) throw UsageError("--add-cm-energy needs a harmonic one-body confinement");
        out.energy = add_cm_offset(out.energy, dim, harmonic->omega);
    }
    if (want_observables && out.status == SolveStatus::Ok && state.is_ground())
        out.observables = ground_state_observables(state, dim, out.q_phi, out.r0, 2);
    return out;
}

int exit_code(SolveStatus s) {
    switch (s) {
    case SolveStatus::Ok: return kExitOk;
    case SolveStatus::Irrelevant: return kExitIrrelevant;
    case SolveStatus::NoSolution: break;
    }
    return kExitNoSolution;
}

void write_csv_row(std::ostream& os, const Outcome& r) {
    os << r.particles << ',';
    if (r.status == SolveStatus::Ok) {
        os << fmt(r.q_phi) << ',' << fmt(r.energy) << ',' << fmt(r.r0) << ',' << fmt(r.p0) << ',';
        if (r.observables)
            os << fmt(r.observables->lambda1) << ',' << fmt(r.observables->moments.at(1)) << ','
               << fmt(r.observables->delta) << ',';
        else
            os << ",,,";
    } else {
        os << ",,,,,,,";
    }
    os << to_string(r.bound) << ',' << to_string(r.status) << '\n';
}

void row(std::ostream& os, std::string_view key, const std::string& value) {
    os << std::left << std::setw(10) << key << value << '\n';
}

// Writes to --output when given, otherwise to the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_) throw UsageError("cannot open output file '" + path + "'");
        os_ = &file_;
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

int cmd_solve(const Options& o, std::ostream& out) {
    const auto sys = load_system(o);
    const auto state = resolve_state(sys, o);
    const bool csv = o.format == "csv";
    const auto r = evaluate(sys, state, o, o.observables || csv);

    Sink sink(o.output, out);
    auto& os = sink.stream();
    if (csv) {
        os << kCsvHeader << '\n';
        write_csv_row(os, r);
        return exit_code(r.status);
    }
    const std::string unit = sys.units.empty() ? "" : " " + sys.units;
    row(os, "system", sys.label());
    row(os, "N", std::to_string(r.particles));
    row(os, "D", std::to_string(sys.dimension()));
    row(os, "phi", fmt(o.phi));
    row(os, "state", state.to_string());
    row(os, "Q_phi", fmt(r.q_phi));
    if (r.status != SolveStatus::NoSolution) {
        row(os, "E", fmt(r.energy) + unit);
        row(os, "r0", fmt(r.r0));
        row(os, "p0", fmt(r.p0));
    }
    row(os, "bound", std::string(to_string(r.bound)));
    row(os, "status", std::string(to_string(r.status)));
    if (o.observables) {
        if (r.observables) {
            row(os, "lambda1", fmt(r.observables->lambda1));
            row(os, "<r>", fmt(r.observables->moments.at(1)));
            row(os, "<r^2>", fmt(r.observables->moments.at(2)));
            row(os, "delta", fmt(r.observables->delta));
        } else if (r.status == SolveStatus::Ok) {
            throw UsageError("--observables is defined for the ground state only");
        }
    }
    return exit_code(r.status);
}

int cmd_scan(const Options& o, std::ostream& out) {
    if (o.n_min < 2 || o.n_max < o.n_min) throw UsageError("scan needs 2 <= --n-min <= --n-max");
    const auto sys = load_system(o);
    std::vector<Outcome> rows;
    for (int n = o.n_min; n <= o.n_max; ++n) rows.push_back(evaluate(sys, StateSpec::ground(n), o, true));

    Sink sink(o.output, out);
    auto& os = sink.stream();
    if (o.format == "table") {
        std::istringstream header{std::string(kCsvHeader)};
        for (std::string col; std::getline(header, col, ',');) os << std::left << std::setw(16) << col;
        os << '\n';
        for (const auto& r : rows) {
            std::ostringstream line;
            write_csv_row(line, r);
            std::string text = line.str();
            text.pop_back();
            std::istringstream cells(text);
            for (std::string cell; std::getline(cells, cell, ',');) os << std::left << std::setw(16) << cell;
            os << '\n';
        }
        return kExitOk;
    }
    os << kCsvHeader << '\n';
    for (const auto& r : rows) write_csv_row(os, r);
    return kExitOk;
}

std::vector<ReferencePoint> load_references(const std::string& source) {
    std::vector<ReferencePoint> points;
    if (source == "table1") {
        for (const auto& r : table1()) points.push_back({state_from_record(r), r.exact});
        return points;
    }
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read references file '" + source + "'");
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string state, energy, extra;
        if (!(fields >> state)) continue;
        if (!(fields >> energy) || (fields >> extra))
            throw ConfigError("expected '<state> <energy>' in " + source, number, 1);
        try {
            points.push_back({StateSpec::parse(state), parse_number(energy, "energy")});
        } catch (const std::exception& e) {
            throw ConfigError(e.what() + std::string(" in ") + source, number, 1);
        }
    }
    if (points.empty()) throw UsageError("no references in '" + source + "'");
    return points;
}

int cmd_fit_phi(const Options& o, std::ostream& out) {
    const auto sys = load_system(o);
    if (!sys.preset) throw UsageError("fit-phi works on a --preset");
    if (o.target_given == !o.references.empty()) throw UsageError("give exactly one of --target and --references");
    const auto bracket = o.bracket.empty() ? std::pair{0.5, 3.0} : std::pair{o.bracket[0], o.bracket[1]};

    std::vector<ReferencePoint> points;
    if (o.target_given)
        points.push_back({resolve_state(sys, o), o.target});
    else
        points = load_references(o.references);
    const auto preset = sys.preset->with_particles(points.front().state.particle_count());

    FitResult fit;
    if (o.target_given)
        fit = fit_phi(preset, points.front().state, o.target, bracket);
    else
        fit = fit_phi_dataset(preset, points, bracket);

    Sink sink(o.output, out);
    auto& os = sink.stream();
    row(os, "system", sys.label());
    row(os, "phi", fmt(fit.phi));
    if (o.target_given) {
        row(os, "residual", fmt(fit.residual));
    } else {
        row(os, "delta", fmt(100.0 * fit.residual) + " %");
        row(os, "unimodal", fit.unimodal ? "yes" : "no");
    }
    row(os, "steps", std::to_string(fit.iterations));
    os << '\n' << std::left << std::setw(24) << "state" << std::setw(16) << "reference" << "E(phi)\n";
    for (const auto& p : points) {
        const auto e = preset_energy(preset, p.state, fit.phi);
        os << std::left << std::setw(24) << p.state.to_string() << std::setw(16) << fmt(p.energy)
           << (e.status == SolveStatus::Ok ? fmt(e.energy) : std::string(to_string(e.status))) << '\n';
    }
    return kExitOk;
}

bool report(std::ostream& os, bool pass, const std::string& what) {
    os << (pass ? "PASS  " : "FAIL  ") << what << '\n';
    return pass;
}

int reproduce_table1(std::ostream& os) {
    constexpr double kEnergyTolerance = 0.002;
    constexpr double kDeltaTolerance = 0.15;
    const char* names[] = {"2", "sqrt2", "1.35", "1.23"};
    const auto preset = lnb_preset(3);
    bool all = true;
    double worst = 0.0;
    std::vector<double> exact;
    for (const auto& r : table1()) exact.push_back(r.exact);

    for (std::size_t c = 0; c < kTable1Phis.size(); ++c) {
        std::vector<double> column;
        for (const auto& r : table1()) {
            const auto e = preset_energy(preset, state_from_record(r), kTable1Phis[c]);
            const double dev = std::abs(e.energy - et_column(r, c));
            worst = std::max(worst, dev);
            column.push_back(e.energy);
            if (!(dev <= kEnergyTolerance)) {
                all = false;
                std::ostringstream what;
                what << "n=" << r.n_sum << " l=" << r.l_sum << " phi=" << names[c] << " printed "
                     << fmt(et_column(r, c)) << " recomputed " << fmt(e.energy);
                report(os, false, what.str());
            }
        }
        const double delta = 100.0 * mean_relative_error(column, exact);
        const double printed = 100.0 * kTable1Deltas[c];
        all &= report(os, std::abs(delta - printed) <= kDeltaTolerance,
                      "Delta phi=" + std::string(names[c]) + ": " + fmt(delta) + " % vs printed " + fmt(printed) +
                          " % (tolerance " + fmt(kDeltaTolerance) + " pt)");
    }
    all &= report(os, worst <= kEnergyTolerance,
                  "64 energies: max deviation " + fmt(worst) + " GeV (tolerance " + fmt(kEnergyTolerance) + ")");
    return all ? kExitOk : kExitMismatch;
}

int reproduce_sgb(std::ostream& os) {
    bool all = true;
    for (int n = 2; n <= 8; ++n) {
        const auto preset = sgb_preset(n);
        const auto p = std::get<SelfGravitating>(preset.parameters);
        const auto e = preset_energy(preset, StateSpec::ground(n), 1.0);
        const double coefficient = -e.energy / (n * n * (n - 1.0) * p.mass * p.coupling * p.coupling);
        all &= report(os, std::abs(coefficient - kSgbCoefficient) <= 1e-12,
                      "N=" + std::to_string(n) + " phi=1: -E/(N^2 (N-1) m g^2) = " + fmt(coefficient));
    }
    os << "ET coefficient          " << fmt(kSgbCoefficient) << " (1/16)\n";
    os << "literature coefficient  " << fmt(kSgbLiteratureBoundCoefficient) << '\n';
    return all ? kExitOk : kExitMismatch;
}

int reproduce_cb(std::ostream& os) {
    bool all = true;
    for (int n = 2; n <= 8; ++n) {
        const auto state = StateSpec::ground(n);
        const double q = global_q_phi(state, 3, 2.0);
        auto preset = cb_preset(n);
        auto& p = std::get<Confined>(preset.parameters);
        p.coupling = 0.0;
        const double free = preset_energy(preset, state, 2.0).energy;
        all &= report(os, free == p.omega * q, "N=" + std::to_string(n) + " g=0: E = " + fmt(free) + " = omega Q");
        p.coupling = 1e-8;
        const double weak = preset_energy(preset, state, 2.0).energy;
        const double rel = std::abs(weak - p.omega * q) / (p.omega * q);
        all &= report(os, rel < 1e-4, "N=" + std::to_string(n) + " g=1e-8: relative deviation " + fmt(rel));
    }
    return all ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
    Sink sink(o.output, out);
    auto& os = sink.stream();
    if (o.target_name == "table1") return reproduce_table1(os);
    if (o.target_name == "sgb-coefficient") return reproduce_sgb(os);
    return reproduce_cb(os);
}

void add_system_options(CLI::App* sub, Options& o) {
    auto* config = sub->add_option("--config", o.config_path, "Hamiltonian file with key = value lines");
    auto* preset = sub->add_option("--preset", o.preset, "named system")
                       ->check(CLI::IsMember({"wib", "sgb", "cb", "lnb"}));
    config->excludes(preset);
    sub->add_option("--phi", o.phi, "weight of radial excitations in Q_phi")->check(CLI::PositiveNumber);
    sub->add_option("--set", o.sets, "override a parameter, key=value")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    sub->add_option("--output", o.output, "write the report to a file");
}

void add_solver_options(CLI::App* sub, Options& o) {
    sub->add_flag("--add-cm-energy", o.add_cm, "add the centre-of-mass zero-point energy D omega / 2");
    sub->add_option("--method", o.method, "closed form or generic root finding")
        ->check(CLI::IsMember({"closed", "generic"}));
    sub->add_option("--bracket", o.bracket, "initial r0 bracket lo,hi")->delimiter(',')->expected(2);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Envelope theory energies for N identical particles", "envelope"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "solve one state");
    add_system_options(solve_cmd, o);
    add_solver_options(solve_cmd, o);
    auto* solve_n = solve_cmd->add_option("--n", o.n, "particle count")->check(CLI::Range(2, 1000000));
    solve_cmd->add_option("--state", o.state, "oscillator levels \"n,l;n,l;...\" (N-1 entries)");
    solve_cmd->add_flag("--observables", o.observables, "print lambda1, <r>, <r^2> and delta");
    solve_cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"table", "csv"}));

    auto* scan_cmd = app.add_subcommand("scan", "ground states over a range of N, as CSV");
    add_system_options(scan_cmd, o);
    add_solver_options(scan_cmd, o);
    scan_cmd->add_option("--n-min", o.n_min, "first N")->check(CLI::Range(2, 1000000));
    scan_cmd->add_option("--n-max", o.n_max, "last N")->check(CLI::Range(2, 1000000));
    scan_cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"table", "csv"}));

    auto* fit_cmd = app.add_subcommand("fit-phi", "fit phi to reference energies");
    add_system_options(fit_cmd, o);
    auto* fit_n = fit_cmd->add_option("--n", o.n, "particle count")->check(CLI::Range(2, 1000000));
    fit_cmd->add_option("--state", o.state, "state of the single reference");
    auto* target = fit_cmd->add_option("--target", o.target, "reference energy of one state");
    fit_cmd->add_option("--references", o.references, "'table1' or a file of '<state> <energy>' lines");
    fit_cmd->add_option("--bracket", o.bracket, "phi bracket lo,hi (default 0.5,3)")->delimiter(',')->expected(2);

    auto* reproduce_cmd = app.add_subcommand("reproduce", "recompute a published result and compare");
    reproduce_cmd->add_option("target", o.target_name, "table1, sgb-coefficient or cb-limit")
        ->required()
        ->check(CLI::IsMember({"table1", "sgb-coefficient", "cb-limit"}));
    reproduce_cmd->add_option("--output", o.output, "write the report to a file");

    auto* export_cmd = app.add_subcommand("export-table1", "write the reference table as CSV");
    export_cmd->add_option("--output", o.output, "write the CSV to a file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    o.n_given = solve_n->count() > 0 || fit_n->count() > 0;
    o.target_given = target->count() > 0;

    try {
        if (solve_cmd->parsed()) return cmd_solve(o, out);
        if (scan_cmd->parsed()) return cmd_scan(o, out);
        if (fit_cmd->parsed()) return cmd_fit_phi(o, out);
        if (reproduce_cmd->parsed()) return cmd_reproduce(o, out);
        Sink sink(o.output, out);
        sink.stream() << table1_csv();
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "envelope: " << (o.config_path.empty() ? std::string() : o.config_path + ": ") << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "envelope: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoBracketError& e) {
        err << "envelope: " << e.what() << '\n';
        return kExitNoBracket;
    } catch (const InfeasibleError& e) {
        err << "envelope: " << e.what() << '\n';
        return kExitNoSolution;
    } catch (const Error& e) {
        err << "envelope: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace envelope::cli
