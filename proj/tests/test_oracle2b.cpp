#include "envelope/closed_forms.hpp"
#include "envelope/errors.hpp"
#include "envelope/et_solver.hpp"
#include "envelope/oracle2b.hpp"
#include "envelope/refdata.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace envelope;

TEST_CASE("hydrogen-like ground state") {
    const double e = ground_energy(0.5, Coulomb{-1.0}, {60.0, 4000});
    CHECK(std::abs(e + 0.25) <= 1e-5);
}

TEST_CASE("three-dimensional oscillator ground state") {
    const double e = ground_energy(0.5, Harmonic{0.5, 1.0}, {20.0, 4000});
    CHECK(std::abs(e - 1.5) <= 1e-5);
}

TEST_CASE("grid refinement converges") {
    const double coarse = ground_energy(0.5, Coulomb{-1.0}, {60.0, 4000});
    const double fine = ground_energy(0.5, Coulomb{-1.0}, {60.0, 8000});
    CHECK(std::abs(coarse - fine) < 1e-6);

    const std::vector<TermKind> hooke = {Harmonic{0.5, 0.5}, Coulomb{1.0}};
    const double h1 = ground_energy(0.5, hooke, {30.0, 4000});
    const double h2 = ground_energy(0.5, hooke, {30.0, 8000});
    CHECK(std::abs(h1 - h2) < 1e-6);
    // Relative motion of the two-electron harmonium at omega = 1/2: total 2 minus centre of mass 3/4.
    CHECK(std::abs(h1 - 1.25) < 1e-5);
}

TEST_CASE("error reporting") {
    CHECK_THROWS_AS(ground_energy(0.5, Gaussian{0.1, 1.0}, {40.0, 4000}), UnboundSpectrumError);
    CHECK_THROWS_AS(ground_energy(0.5, Coulomb{-1.0}, {8.0, 4000}), DomainError);
    CHECK_THROWS_AS(ground_energy(0.5, Coulomb{-1.0}, {60.0, 100}), DomainError);
    CHECK_THROWS_AS(ground_energy(0.0, Coulomb{-1.0}, {60.0, 4000}), DomainError);
    CHECK_THROWS_AS(ground_energy(0.5, NonrelativisticKinetic{1.0}, {60.0, 4000}), DomainError);
}

TEST_CASE("ET upper bound for a two-body Gaussian") {
    // Depth five times the published one so that the two-body ET equation has a root.
    const auto wib = std::get<WeaklyInteracting>(wib_preset().parameters);
    const Gaussian deep{5.0 * wib.depth, wib.range};
    const HamiltonianSpec h(2, 3, NonrelativisticKinetic{wib.mass}, Zero{}, deep);
    const auto et = solve(h, 1.5);
    REQUIRE(et.status == SolveStatus::Ok);
    const double exact = ground_energy(0.5 * wib.mass, deep, {200.0, 8000});
    CHECK(et.energy >= exact - 1e-5);
}
