#include "envelope/closed_forms.hpp"
#include "envelope/errors.hpp"
#include "envelope/et_solver.hpp"
#include "envelope/quantum_numbers.hpp"
#include "envelope/refdata.hpp"
#include "envelope/special_functions.hpp"

#include <doctest.h>

#include <cmath>

using namespace envelope;

namespace {

const WeaklyInteracting kWib = std::get<WeaklyInteracting>(wib_preset().parameters);

// Q_phi that puts the Lambert argument of the Gaussian solution exactly at y.
double q_for_lambert_argument(int n, double y) {
    return -y * std::sqrt(static_cast<double>(n)) * (n - 1) * kWib.range * std::sqrt(2.0 * kWib.mass * kWib.depth);
}

} // namespace

TEST_CASE("weakly interacting bosons") {
    const auto n4 = wib_solution(4, 3, kWib.mass, kWib.depth, kWib.range, 4.5);
    CHECK(wib_lambert_argument(4, kWib.mass, kWib.depth, kWib.range, 4.5) == doctest::Approx(-0.31403).epsilon(1e-4));
    CHECK(n4.status == SolveStatus::Irrelevant);
    CHECK(n4.energy > 0.0);

    // Frozen from an independent scipy evaluation (lambertw and brentq on the stationarity condition).
    const auto n5 = wib_solution(5, 3, kWib.mass, kWib.depth, kWib.range, 6.0);
    CHECK(n5.status == SolveStatus::Ok);
    CHECK(n5.energy == doctest::Approx(-0.6899491677791696).epsilon(1e-12));
    CHECK(n5.r0 == doctest::Approx(29.520947715437728).epsilon(1e-12));

    const auto n2 = wib_solution(2, 3, kWib.mass, kWib.depth, kWib.range, 1.5);
    CHECK(n2.status == SolveStatus::NoSolution);

    // Q -> 0: particles sit at the bottom of the well.
    const auto tiny = wib_solution(6, 3, kWib.mass, kWib.depth, kWib.range, 1e-9);
    CHECK(tiny.energy == doctest::Approx(-15.0 * kWib.depth).epsilon(1e-7));

    CHECK_THROWS_AS(wib_solution(4, 3, -1.0, kWib.depth, kWib.range, 4.5), DomainError);
    CHECK_THROWS_AS(wib_solution(4, 3, kWib.mass, kWib.depth, kWib.range, 0.0), DomainError);
}

TEST_CASE("weakly interacting thresholds") {
    for (int n : {2, 3, 5, 8}) {
        const double q_branch = q_for_lambert_argument(n, kLambertBranchPoint);
        CHECK(wib_lambert_argument(n, kWib.mass, kWib.depth, kWib.range, q_branch) ==
              doctest::Approx(kLambertBranchPoint).epsilon(1e-15));
        CHECK(wib_solution(n, 3, kWib.mass, kWib.depth, kWib.range, q_branch * (1.0 - 1e-14)).status !=
              SolveStatus::NoSolution);
        CHECK(wib_solution(n, 3, kWib.mass, kWib.depth, kWib.range, q_branch * (1.0 + 1e-12)).status ==
              SolveStatus::NoSolution);

        const double q_zero = q_for_lambert_argument(n, kBindingThreshold);
        const auto at_zero = wib_solution(n, 3, kWib.mass, kWib.depth, kWib.range, q_zero);
        CHECK(std::abs(at_zero.energy) <= 1e-12);
        CHECK(wib_solution(n, 3, kWib.mass, kWib.depth, kWib.range, q_zero * (1.0 - 1e-9)).status == SolveStatus::Ok);
        CHECK(wib_solution(n, 3, kWib.mass, kWib.depth, kWib.range, q_zero * (1.0 + 1e-9)).status ==
              SolveStatus::Irrelevant);
    }
}

TEST_CASE("self-gravitating bosons") {
    CHECK(sgb_solution(2, 1.0, 1.0, 1.0).energy == -0.25);
    CHECK(sgb_solution(3, 1.0, 1.0, 3.0).energy == doctest::Approx(-0.5).epsilon(1e-15));
    for (int n = 2; n <= 8; ++n) {
        const double q = global_q_phi(StateSpec::ground(n), 3, 1.0);
        CHECK(sgb_solution(n, 1.0, 1.0, q).energy == doctest::Approx(-0.0625 * n * n * (n - 1)).epsilon(1e-14));
        const double eq2 = sgb_solution(n, 1.0, 1.0, 1.0).energy;
        for (double q2 : {0.3, 2.0, 11.0}) {
            CHECK(sgb_solution(n, 1.0, 1.0, q2).energy * q2 * q2 == doctest::Approx(eq2).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(sgb_solution(3, 1.0, 0.0, 3.0), DomainError);
}

TEST_CASE("confined bosons") {
    for (int n : {2, 4, 7}) {
        for (double q : {1.5, 4.0}) CHECK(cb_solution(n, 1.0, 0.5, 0.0, q).energy == 0.5 * q);
    }
    CHECK(cb_quartic_argument(2, 1.0, 0.5, 1.0, 3.0) == doctest::Approx(30.238).epsilon(1e-4));
    // Frozen from scipy brentq on the stationarity condition of the same Hamiltonian.
    const auto r = cb_solution(2, 1.0, 0.5, 1.0, 3.0);
    CHECK(r.energy == doctest::Approx(1.7820493076294226).epsilon(1e-12));

    const double q3 = 3.0;
    const auto near_free = cb_solution(3, 1.0, 0.5, 1e-8, q3);
    CHECK(std::abs(near_free.energy - 0.5 * q3) / (0.5 * q3) < 1e-4);

    double prev = cb_solution(5, 1.0, 0.5, 0.0, 6.0).energy;
    for (double g = 1e-6; g < 100.0; g *= 1.6) {
        const double e = cb_solution(5, 1.0, 0.5, g, 6.0).energy;
        CHECK(e > prev);
        prev = e;
    }
    CHECK_THROWS_AS(cb_solution(3, 1.0, 0.5, -1.0, 3.0), DomainError);
}

TEST_CASE("centre-of-mass offset") {
    CHECK(add_cm_offset(1.7821, 3, 0.5) == doctest::Approx(2.5321).epsilon(1e-14));
    CHECK(add_cm_offset(0.0, 3, 0.5) == 0.75);
    CHECK(add_cm_offset(5.0, 2, 1.0) == 6.0);
}

TEST_CASE("large-N baryons") {
    const auto p = std::get<LargeNBaryon>(lnb_preset().parameters);
    const auto ground = StateSpec::ground(3);
    CHECK(std::abs(lnb_solution(3, p.tension, p.coupling, global_q_phi(ground, 3, 2.0)).energy - 2.468) <= 5e-4);
    CHECK(std::abs(lnb_solution(3, p.tension, p.coupling, global_q_phi(StateSpec({{0, 1}, {0, 0}}), 3, 2.0)).energy -
                   2.914) <= 5e-4);
    CHECK(std::abs(lnb_solution(3, p.tension, p.coupling, global_q_phi(ground, 3, 1.35)).energy - 2.128) <= 1e-3);

    for (double q : {1.0, 2.35, 3.0, 9.5}) {
        const auto r = lnb_solution(3, p.tension, p.coupling, q);
        const double s = 3.0 * q - std::pow(3.0, 1.5) * p.coupling;
        CHECK(r.energy * r.energy == doctest::Approx(4.0 * p.tension * s).epsilon(1e-12));
    }
    CHECK(lnb_solution(3, 0.2, 2.0, 1.0).status == SolveStatus::NoSolution);
    CHECK(lnb_solution(3, 0.2, 0.0, 3.0).energy == doctest::Approx(std::sqrt(0.8 * 9.0)).epsilon(1e-15));
}

TEST_CASE("closed forms satisfy the generic equations") {
    for (const auto& base : {wib_preset(), sgb_preset(), cb_preset(), lnb_preset()}) {
        for (int n : {2, 3, 5, 8}) {
            const auto preset = base.with_particles(n);
            const auto h = preset.hamiltonian();
            for (double phi : {1.0, std::sqrt(2.0), 2.0}) {
                const double q = global_q_phi(StateSpec::ground(n), 3, phi);
                const auto r = closed_form(preset, q);
                if (r.status != SolveStatus::Ok) continue;
                CAPTURE(preset.name());
                CAPTURE(n);
                CAPTURE(phi);
                const double p0 = q / r.r0;
                const double scale = n * std::abs(p0 * term_derivative(h.kinetic(), p0)) + 1.0;
                CHECK(std::abs(residual(h, q, r.r0)) <= 1e-9 * scale);
                CHECK(std::abs(r.energy - et_energy(h, q, r.r0)) <= 1e-10 * (1.0 + std::abs(r.energy)));
            }
        }
    }
}
