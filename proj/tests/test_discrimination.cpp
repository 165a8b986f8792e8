#include <doctest.h>

#include <cmath>

#include "qsd/discrimination.hpp"
#include "test_helpers.hpp"

using namespace qsd;
using qsd::testing::Rng;

TEST_CASE("helstrom_bound landmark values") {
    CHECK(helstrom_bound({0, 0, 1}, {0, 0, -1}) == 0.0);
    CHECK(helstrom_bound({0.3, 0.2, 0.1}, {0.3, 0.2, 0.1}) == doctest::Approx(0.5));
    CHECK(std::abs(helstrom_bound({1, 0, 0}, {0, 0, 1}) - (0.5 - std::sqrt(2.0) / 4.0)) <=
          kAlgebraTol);
    CHECK(helstrom_bound({1, 0, 0}, {0, 0, 1}) == doctest::Approx(0.146447).epsilon(1e-4));
}

TEST_CASE("no sampled detector beats the bound") {
    Rng rng(31);
    for (int pair = 0; pair < 10; ++pair) {
        const BlochVector r0 = qsd::testing::random_ball(rng);
        const BlochVector r1 = qsd::testing::random_ball(rng);
        const double bound = helstrom_bound(r0, r1);
        for (int i = 0; i < 1000; ++i) {
            CHECK(error_rate(qsd::testing::random_povm(rng), r0, r1) >= bound - kAlgebraTol);
        }
    }
}

TEST_CASE("helstrom_detector landmark measurements") {
    SUBCASE("z pair gives the z projectors") {
        const BinaryPovm d = helstrom_detector({0, 0, 1}, {0, 0, -1});
        CHECK(max_abs_diff(d.element0, Mat2::diagonal(1.0, 0.0)) <= kAlgebraTol);
        CHECK(max_abs_diff(d.element1, Mat2::diagonal(0.0, 1.0)) <= kAlgebraTol);
    }
    SUBCASE("symmetric x pair gives the x projectors") {
        const BinaryPovm d = helstrom_detector({0.8, 0, 0}, {-0.8, 0, 0});
        CHECK(max_abs_diff(d.element0, bloch_to_density({1, 0, 0})) <= kAlgebraTol);
        CHECK(max_abs_diff(d.element1, bloch_to_density({-1, 0, 0})) <= kAlgebraTol);
    }
    SUBCASE("x vs z pair projects along (1, 0, -1)/sqrt(2)") {
        const BinaryPovm d = helstrom_detector({1, 0, 0}, {0, 0, 1});
        const double inv = 1.0 / std::sqrt(2.0);
        CHECK(max_abs_diff(d.element0, bloch_to_density({inv, 0, -inv})) <= kAlgebraTol);
    }
    SUBCASE("coincident states are rejected") {
        CHECK_THROWS_AS(helstrom_detector({0.5, 0, 0}, {0.5, 0, 0}), DegenerateScenario);
    }
}

TEST_CASE("helstrom_detector attains the bound") {
    Rng rng(32);
    for (int i = 0; i < 1000; ++i) {
        const BlochVector r0 = qsd::testing::random_ball(rng);
        const BlochVector r1 = qsd::testing::random_ball(rng);
        if ((r0 - r1).norm() < kDegenerateCutoff) {
            continue;
        }
        const BinaryPovm d = helstrom_detector(r0, r1);
        validate_povm(d);
        CHECK(std::abs(error_rate(d, r0, r1) - helstrom_bound(r0, r1)) <= kAlgebraTol);
    }
}

TEST_CASE("response landmark values") {
    Rng rng(33);
    const Mat2 rho = qsd::testing::random_density(rng);
    const BinaryPovm all{Mat2::identity(), Mat2{}};
    CHECK(response(all, rho).p0 == doctest::Approx(1.0));
    CHECK(response(all, rho).p1 == doctest::Approx(0.0));

    const BinaryPovm coin{Mat2::identity() * 0.5, Mat2::identity() * 0.5};
    CHECK(response(coin, rho).p0 == doctest::Approx(0.5));
    CHECK(response(coin, rho).p1 == doctest::Approx(0.5));

    const BinaryPovm x_axis{bloch_to_density({1, 0, 0}), bloch_to_density({-1, 0, 0})};
    const DetectorResponse r = response(x_axis, bloch_to_density({0.8, 0, 0}));
    CHECK(std::abs(r.p0 - 0.9) <= kAlgebraTol);
    CHECK(std::abs(r.p1 - 0.1) <= kAlgebraTol);
}

TEST_CASE("response probabilities are complementary") {
    Rng rng(34);
    for (int i = 0; i < 1000; ++i) {
        const DetectorResponse r =
            response(qsd::testing::random_povm(rng), qsd::testing::random_density(rng));
        CHECK(r.p0 >= 0.0);
        CHECK(r.p0 <= 1.0);
        CHECK(std::abs(r.p0 + r.p1 - 1.0) <= kAlgebraTol);
    }
}

TEST_CASE("error_rate landmark values") {
    const BinaryPovm coin{Mat2::identity() * 0.5, Mat2::identity() * 0.5};
    CHECK(error_rate(coin, {0.2, 0, 0.4}, {0, -0.6, 0}) == doctest::Approx(0.5));

    const BinaryPovm always0{Mat2::identity(), Mat2{}};
    CHECK(error_rate(always0, {0.2, 0, 0.4}, {0, -0.6, 0}) == doctest::Approx(0.5));

    const BinaryPovm d = helstrom_detector({1, 0, 0}, {0, 0, 1});
    CHECK(error_rate(d, {1, 0, 0}, {0, 0, 1}) == doctest::Approx(0.146447).epsilon(1e-4));
}

TEST_CASE("canonicalize fixes the labelling convention") {
    Rng rng(35);
    for (int i = 0; i < 500; ++i) {
        const BlochVector r0 = qsd::testing::random_ball(rng);
        const BlochVector r1 = qsd::testing::random_ball(rng);
        const BinaryPovm d = qsd::testing::random_povm(rng);
        const BinaryPovm c = canonicalize(d, r0, r1);
        const double vote0 = response(c, bloch_to_density(r0)).p0;
        const double vote1 = response(c, bloch_to_density(r1)).p0;
        CHECK(vote0 >= vote1 - kAlgebraTol);
        // Idempotent.
        const BinaryPovm cc = canonicalize(c, r0, r1);
        CHECK(max_abs_diff(cc.element0, c.element0) == 0.0);
    }
}

TEST_CASE("povm_from_params round trips and validates") {
    Rng rng(36);
    for (int i = 0; i < 500; ++i) {
        const BinaryPovm d = qsd::testing::random_povm(rng);
        validate_povm(d);
        const auto [a, b] = povm_params(d);
        const BinaryPovm back = povm_from_params(a, b);
        CHECK(max_abs_diff(back.element0, d.element0) <= kAlgebraTol);
    }
    CHECK_THROWS_AS(povm_from_params(0.3, {0.4, 0, 0}), InvalidState);
    CHECK_THROWS_AS(povm_from_params(1.2, {0, 0, 0}), InvalidState);
    CHECK_THROWS_AS(povm_from_params(-0.1, {0, 0, 0}), InvalidState);
    CHECK_THROWS_AS(povm_from_params(0.9, {0, 0.2, 0}), InvalidState);
}

TEST_CASE("validate_povm rejects broken detectors") {
    CHECK_THROWS_AS(validate_povm({Mat2::identity(), Mat2::identity()}), InvalidState);
    CHECK_THROWS_AS(validate_povm({Mat2::diagonal(1.5, 0.0), Mat2::diagonal(-0.5, 1.0)}),
                    InvalidState);
    CHECK_THROWS_AS(validate_povm({Mat2{0.5, 0.3, 0.1, 0.5}, Mat2{0.5, -0.3, -0.1, 0.5}}),
                    InvalidState);
}

TEST_CASE("error_rate is invariant under joint unitary conjugation") {
    Rng rng(37);
    for (int i = 0; i < 300; ++i) {
        const BlochVector r0 = qsd::testing::random_ball(rng);
        const BlochVector r1 = qsd::testing::random_ball(rng);
        const BinaryPovm d = qsd::testing::random_povm(rng);
        const Mat2 u = qsd::testing::random_unitary(rng);
        const Mat2 udag = u.adjoint();

        const BinaryPovm rotated{u * d.element0 * udag, u * d.element1 * udag};
        const BlochVector s0 = density_to_bloch(u * bloch_to_density(r0) * udag);
        const BlochVector s1 = density_to_bloch(u * bloch_to_density(r1) * udag);
        CHECK(std::abs(error_rate(rotated, s0, s1) - error_rate(d, r0, r1)) <= kAlgebraTol);
    }
}
