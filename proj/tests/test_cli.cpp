#include "cli.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using envelope::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::string value_of(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    for (std::string line; std::getline(in, line);) {
        std::istringstream fields(line);
        std::string k, v;
        fields >> k >> v;
        if (k == key) return v;
    }
    return {};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path, std::ios::binary) << contents;
    return path;
}

} // namespace

TEST_CASE("solve presets") {
    const auto lnb = invoke({"solve", "--preset", "lnb", "--n", "3", "--phi", "2"});
    CHECK(lnb.code == 0);
    CHECK(std::abs(std::stod(value_of(lnb.out, "E")) - 2.468) < 5e-4);
    CHECK(value_of(lnb.out, "bound") == "UpperBound");
    CHECK(lnb.out.find("GeV") != std::string::npos);

    const auto wib = invoke({"solve", "--preset", "wib", "--n", "4"});
    CHECK(wib.code == 2);
    CHECK(value_of(wib.out, "status") == "Irrelevant");

    const auto wib2 = invoke({"solve", "--preset", "wib", "--n", "2"});
    CHECK(wib2.code == 3);
    CHECK(value_of(wib2.out, "status") == "NoSolution");

    const auto sgb = invoke({"solve", "--preset", "sgb", "--n", "2", "--phi", "1"});
    CHECK(sgb.code == 0);
    CHECK(std::stod(value_of(sgb.out, "E")) == -0.25);
}

TEST_CASE("solve options") {
    const auto obs = invoke({"solve", "--preset", "sgb", "--n", "2", "--phi", "1", "--observables"});
    CHECK(std::stod(value_of(obs.out, "lambda1")) == doctest::Approx(0.5));
    CHECK(std::stod(value_of(obs.out, "<r^2>")) == doctest::Approx(6.0));

    const auto excited = invoke({"solve", "--preset", "lnb", "--state", "1,0;0,0", "--observables"});
    CHECK(excited.code == 1);
    CHECK(!excited.err.empty());

    const auto state = invoke({"solve", "--preset", "lnb", "--state", "0,1;0,0", "--phi", "1.35"});
    CHECK(std::abs(std::stod(value_of(state.out, "E")) - 2.633) < 5e-4);
    CHECK(invoke({"solve", "--preset", "lnb", "--state", "0,0;0,0", "--n", "4"}).code == 1);

    const auto cm = invoke({"solve", "--preset", "cb", "--set", "coupling=0", "--add-cm-energy"});
    CHECK(std::stod(value_of(cm.out, "E")) == doctest::Approx(0.5 * 1.5 + 1.5 * 0.5));
    CHECK(invoke({"solve", "--preset", "lnb", "--add-cm-energy"}).code == 1);

    const auto generic = invoke({"solve", "--preset", "lnb", "--method", "generic"});
    CHECK(std::stod(value_of(generic.out, "E")) == doctest::Approx(2.4680939).epsilon(1e-7));
    const auto hinted = invoke({"solve", "--preset", "lnb", "--method", "generic", "--bracket", "5,7"});
    CHECK(value_of(hinted.out, "E") == value_of(generic.out, "E"));

    const auto csv = invoke({"solve", "--preset", "sgb", "--phi", "1", "--format", "csv"});
    CHECK(csv.out == "N,Q_phi,E,r0,p0,lambda1,mean_r,delta,bound,status\n"
                     "2,1,-0.25,2,0.5,0.5,2.25675833,0.282094792,Unknown,Ok\n");
}

TEST_CASE("solve from a config file") {
    const auto path = temp_file("envelope_cli_hydrogen.cfg", "# two bosons in a Coulomb well\nn = 2\nmass = 1\n"
                                                              "pairwise = coulomb\ncoupling = -1\n");
    const auto r = invoke({"solve", "--config", path.string()});
    CHECK(r.code == 0);
    // -N^2 (N-1)^3 m g^2 / (16 Q^2) with Q = 3/2.
    CHECK(std::stod(value_of(r.out, "E")) == doctest::Approx(-4.0 / (16.0 * 2.25)));
    CHECK(value_of(r.out, "bound") == "UpperBound");

    const auto set = invoke({"solve", "--config", path.string(), "--set", "coupling=-2", "--phi", "1"});
    CHECK(std::stod(value_of(set.out, "E")) == doctest::Approx(-1.0));

    CHECK(invoke({"solve", "--config", path.string(), "--set", "colour=1"}).code == 1);
    CHECK(invoke({"solve", "--config", path.string(), "--method", "closed"}).code == 1);
    CHECK(invoke({"solve", "--config", path.string(), "--preset", "sgb"}).code == 1);
    CHECK(invoke({"solve"}).code == 1);

    const auto bad = temp_file("envelope_cli_bad.cfg", "n = 2\nmass = 1\n  strength = 2\n");
    const auto e = invoke({"solve", "--config", bad.string()});
    CHECK(e.code == 1);
    CHECK(e.err.find("line 3, column 3") != std::string::npos);
    CHECK(e.out.empty());

    CHECK(invoke({"solve", "--config", "/nonexistent/envelope.cfg"}).code == 1);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("scan") {
    const auto sgb = invoke({"scan", "--preset", "sgb", "--phi", "1", "--n-min", "2", "--n-max", "8"});
    CHECK(sgb.code == 0);
    const auto rows = csv_rows(sgb.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].size() == 10);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double n = std::stod(rows[i][0]);
        CHECK(std::stod(rows[i][2]) == doctest::Approx(-0.0625 * n * n * (n - 1.0)).epsilon(1e-8));
        CHECK(rows[i][9] == "Ok");
    }

    const auto cb = csv_rows(invoke({"scan", "--preset", "cb", "--set", "coupling=0", "--add-cm-energy"}).out);
    for (std::size_t i = 1; i < cb.size(); ++i)
        CHECK(std::stod(cb[i][2]) == doctest::Approx(0.5 * std::stod(cb[i][1]) + 0.75).epsilon(1e-8));

    const auto wib = csv_rows(invoke({"scan", "--preset", "wib", "--phi", "2"}).out);
    REQUIRE(wib.size() == 8);
    for (std::size_t i = 1; i <= 3; ++i) {
        CHECK(wib[i][9] != "Ok");
        CHECK(wib[i].size() == 10);
        for (std::size_t c = 1; c <= 7; ++c) CHECK(wib[i][c].empty());
    }
    CHECK(wib[1][9] == "NoSolution");
    CHECK(wib[4][0] == "5");
    CHECK(wib[4][9] == "Ok");
    CHECK(std::stod(wib[4][2]) < 0.0);

    CHECK(invoke({"scan", "--preset", "sgb", "--n-min", "5", "--n-max", "3"}).code == 1);
}

TEST_CASE("scan output is byte-stable") {
    const std::vector<std::string> args = {"scan", "--preset", "lnb", "--n-min", "3", "--n-max", "12", "--phi", "1.23"};
    const auto a = invoke(args).out;
    const auto b = invoke(args).out;
    CHECK(a == b);
    CHECK(a.find('\r') == std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "envelope_cli_scan.csv";
    auto with_output = args;
    with_output.insert(with_output.end(), {"--output", path.string()});
    const auto written = invoke(with_output);
    CHECK(written.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contents == a);
    std::filesystem::remove(path);
}

TEST_CASE("fit-phi") {
    const auto single = invoke({"fit-phi", "--preset", "lnb", "--target", "2.128"});
    CHECK(single.code == 0);
    CHECK(std::abs(std::stod(value_of(single.out, "phi")) - 1.35) <= 0.005);

    const auto sgb = invoke({"fit-phi", "--preset", "sgb", "--n", "2", "--target", "-0.25"});
    CHECK(std::abs(std::stod(value_of(sgb.out, "phi")) - 1.0) <= 1e-6);

    const auto all = invoke({"fit-phi", "--preset", "lnb", "--references", "table1"});
    CHECK(all.code == 0);
    CHECK(std::stod(value_of(all.out, "phi")) == doctest::Approx(1.27133).epsilon(1e-4));

    const auto refs = temp_file("envelope_cli_refs.txt", "# state energy\n0,0;0,0 2.128\n0,1;0,0   2.606\n");
    const auto file = invoke({"fit-phi", "--preset", "lnb", "--references", refs.string()});
    CHECK(file.code == 0);
    CHECK(file.out.find("0,1;0,0") != std::string::npos);
    std::filesystem::remove(refs);

    CHECK(invoke({"fit-phi", "--preset", "lnb", "--target", "9", "--bracket", "1,1.5"}).code == 4);
    CHECK(invoke({"fit-phi", "--preset", "wib", "--n", "5", "--target", "-1", "--bracket", "1,3"}).code == 3);
    CHECK(invoke({"fit-phi", "--preset", "lnb"}).code == 1);
    CHECK(invoke({"fit-phi", "--preset", "lnb", "--target", "2", "--references", "table1"}).code == 1);
}

TEST_CASE("reproduce and export") {
    for (const char* target : {"table1", "sgb-coefficient", "cb-limit"}) {
        const auto r = invoke({"reproduce", target});
        CAPTURE(target);
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(r.out.find("PASS") != std::string::npos);
    }
    const auto sgb = invoke({"reproduce", "sgb-coefficient"});
    CHECK(sgb.out.find("0.0625") != std::string::npos);
    CHECK(sgb.out.find("0.0593") != std::string::npos);
    CHECK(invoke({"reproduce", "figure2"}).code == 1);

    const auto csv = invoke({"export-table1"});
    CHECK(csv.code == 0);
    CHECK(csv_rows(csv.out).size() == 17);
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 1);
}
