#include "envelope/errors.hpp"
#include "envelope/observables.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace envelope;

TEST_CASE("scale parameters") {
    const auto two = scale_params(2, 1.5, 1.0).lambdas;
    REQUIRE(two.size() == 1);
    CHECK(two[0] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));

    const auto eight = scale_params(8, 4.2, 3.3).lambdas;
    REQUIRE(eight.size() == 7);
    CHECK(eight[6] / eight[0] == doctest::Approx(std::sqrt(7.0 / 4.0)).epsilon(1e-14));
    for (std::size_t i = 1; i < eight.size(); ++i) CHECK(eight[i] > eight[i - 1]);

    // Via p0 = Q / r0: lambda_i = sqrt(i/(i+1) N / Q) p0.
    for (int n : {2, 3, 6}) {
        for (double q : {0.7, 3.0, 12.5}) {
            for (double r0 : {0.01, 1.0, 250.0}) {
                const auto l = scale_params(n, q, r0).lambdas;
                const double p0 = q / r0;
                for (int i = 1; i < n; ++i) {
                    const double via_p = std::sqrt(i / (i + 1.0) * n / q) * p0;
                    CHECK(std::abs(l[static_cast<std::size_t>(i - 1)] - via_p) <= 1e-14 * via_p);
                }
            }
        }
    }
    CHECK_THROWS_AS(scale_params(1, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(scale_params(3, 1.0, 0.0), DomainError);
}

TEST_CASE("pair correlation and delta") {
    CHECK(pair_correlation(1.0, 3, 0.0) == doctest::Approx(std::pow(std::numbers::pi, -1.5)).epsilon(1e-15));
    CHECK(pair_correlation(1.0, 3, 0.5) < pair_correlation(1.0, 3, 0.1));
    CHECK(delta_at_origin(1.0, 3) == doctest::Approx(4.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(delta_at_origin(1.0, 2) == doctest::Approx(2.0).epsilon(1e-15));
    for (int d : {2, 3, 4, 5}) {
        for (double l : {0.1, 1.0, 10.0}) {
            CHECK(std::abs(delta_at_origin(l, d) - pair_correlation(l, d, 0.0) * oracle::sphere_area(d)) <=
                  1e-12 * delta_at_origin(l, d));
            CHECK(delta_at_origin(2.0 * l, d) == doctest::Approx(std::pow(2.0, d) * delta_at_origin(l, d)).epsilon(1e-14));
        }
    }
}

TEST_CASE("normalisation and moments by quadrature") {
    for (int d : {2, 3, 5}) {
        for (double l : {0.1, 1.0, 10.0}) {
            const double norm = oracle::integrate_half_line(
                [&](double r) { return oracle::sphere_area(d) * std::pow(r, d - 1) * pair_correlation(l, d, r); });
            CAPTURE(d);
            CAPTURE(l);
            CHECK(std::abs(norm - 1.0) <= 1e-8);
            for (int k = 0; k <= 4; ++k) {
                const double q = oracle::integrate_half_line([&](double r) {
                    return oracle::sphere_area(d) * std::pow(r, d - 1 + k) * pair_correlation(l, d, r);
                });
                CHECK(std::abs(radial_moment(l, d, k) - q) <= 1e-8 * q);
            }
        }
    }
}

TEST_CASE("moment examples") {
    CHECK(radial_moment(3.7, 3, 0) == 1.0);
    const double mean_r = oracle::integrate_half_line(
        [](double r) { return 4.0 * std::numbers::pi * r * r * r * pair_correlation(1.0, 3, r); });
    CHECK(mean_r == doctest::Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(radial_moment(1.0, 3, 1) == doctest::Approx(mean_r).epsilon(1e-12));
    CHECK(radial_moment(2.0, 3, 2) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK_THROWS_AS(radial_moment(1.0, 3, -1), DomainError);
}

TEST_CASE("gamma through std::tgamma matches exact values") {
    CHECK(std::tgamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(std::tgamma(1.5) == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(std::tgamma(2.5) == doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(std::tgamma(5.0) == doctest::Approx(24.0).epsilon(1e-15));
}

TEST_CASE("ground-state observable set") {
    const auto obs = ground_state_observables(StateSpec::ground(4), 3, 4.5, 2.0, 4);
    CHECK(obs.lambda1 == doctest::Approx(std::sqrt(4.0 * 4.5 / 2.0) / 2.0).epsilon(1e-15));
    CHECK(obs.moments.at(0) == 1.0);
    CHECK(obs.moments.size() == 5);
    CHECK(obs.delta > 0.0);
    CHECK(obs.moments.at(2) == doctest::Approx(1.5 / (obs.lambda1 * obs.lambda1)).epsilon(1e-14));
    CHECK_THROWS_AS(ground_state_observables(StateSpec({{1, 0}, {0, 0}}), 3, 5.0, 2.0), DomainError);
}
