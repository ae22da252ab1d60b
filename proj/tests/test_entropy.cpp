#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "renyi/entropy.hpp"
#include "renyi/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace renyi;
using testing_support::Engine;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 40-digit mpmath evaluations of the defining formulas.
constexpr double kS2ThreeQuarters = 0.47000362924573555365; // -ln(5/8)
constexpr double kS2Triple = 0.61618613942381698443;        // -ln(0.54)
constexpr double kSInfTriple = 0.35667494393873237891;      // -ln(0.7)
constexpr double kS1Triple = 0.80181855254333730856;

std::vector<double> uniform(std::size_t n) { return std::vector<double>(n, 1.0 / static_cast<double>(n)); }

} // namespace

TEST_CASE("EntropyOrder normalization") {
    CHECK(EntropyOrder::of(0.0).kind() == EntropyOrder::Kind::Zero);
    CHECK(EntropyOrder::of(1.0).kind() == EntropyOrder::Kind::One);
    CHECK(EntropyOrder::of(1.0 + 1e-7).kind() == EntropyOrder::Kind::One);
    CHECK(EntropyOrder::of(1.0 - 9e-7).kind() == EntropyOrder::Kind::One);
    CHECK(EntropyOrder::of(1.0 + 2e-6).kind() == EntropyOrder::Kind::Finite);
    CHECK(EntropyOrder::of(kInf).kind() == EntropyOrder::Kind::Infinity);
    CHECK(EntropyOrder::of(2.5).value() == 2.5);
    CHECK_THROWS_AS(EntropyOrder::of(-0.5), Error);
    CHECK_THROWS_AS(EntropyOrder::of(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST_CASE("renyi examples") {
    for (std::size_t n : {1u, 2u, 5u, 64u})
        for (double q : {0.0, 0.3, 1.0, 2.0, 7.5, kInf})
            CHECK(renyi::renyi(ProbDist::make(uniform(n)), EntropyOrder::of(q)) == std::log(static_cast<double>(n)));

    const ProbDist point = ProbDist::make({1.0, 0.0, 0.0});
    for (double q : {0.0, 0.5, 1.0, 2.0, kInf}) CHECK(renyi::renyi(point, EntropyOrder::of(q)) == 0.0);

    CHECK(renyi::renyi(ProbDist::make({0.75, 0.25}), EntropyOrder::of(2)) == doctest::Approx(kS2ThreeQuarters).epsilon(1e-14));
    const ProbDist triple = ProbDist::make({0.7, 0.2, 0.1});
    CHECK(renyi::renyi(triple, EntropyOrder::infinity()) == doctest::Approx(kSInfTriple).epsilon(1e-14));
    CHECK(renyi::renyi(triple, EntropyOrder::of(2)) == doctest::Approx(kS2Triple).epsilon(1e-14));
    CHECK(renyi::renyi(triple, EntropyOrder::one()) == doctest::Approx(kS1Triple).epsilon(1e-14));
    CHECK(renyi::renyi(triple, EntropyOrder::zero()) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("zero entries are skipped for every positive order") {
    const ProbDist p = ProbDist::make({0.5, 0.0, 0.5, 0.0});
    for (double q : {0.1, 0.5, 0.9, 1.0, 3.0, kInf})
        CHECK(renyi::renyi(p, EntropyOrder::of(q)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(renyi::renyi(p, EntropyOrder::zero()) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("renyi_quantum examples") {
    CHECK(renyi_quantum(HermitianOperator::diagonal(std::vector<double>{0.5, 0.5}), EntropyOrder::of(2)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
    const auto pure = HermitianOperator::make(SquareMatrix::from_parts(2, std::vector<double>{0.5, 0.5, 0.5, 0.5}));
    for (double q : {0.0, 0.5, 1.0, 2.0, kInf}) CHECK(renyi_quantum(pure, EntropyOrder::of(q)) <= 1e-14);
    CHECK(renyi_quantum(HermitianOperator::diagonal(std::vector<double>{0.7, 0.2, 0.1}), EntropyOrder::of(2)) ==
          doctest::Approx(kS2Triple).epsilon(1e-14));
}

TEST_CASE("renyi_curve examples") {
    const auto flat = renyi_curve(ProbDist::make(uniform(4)), std::vector<double>{0, 1, 2, kInf});
    REQUIRE(flat.size() == 4);
    for (const auto &pt : flat) CHECK(pt.entropy == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK(flat[3].q == kInf);

    const auto two = renyi_curve(ProbDist::make({0.7, 0.2, 0.1}), std::vector<double>{2, 1});
    CHECK(two[0].q == 2);
    CHECK(two[0].entropy == doctest::Approx(kS2Triple).epsilon(1e-14));
    CHECK(two[1].entropy == doctest::Approx(kS1Triple).epsilon(1e-14));

    CHECK(renyi_curve(ProbDist::make({1.0}), std::vector<double>{}).empty());
    CHECK_THROWS_AS(renyi_curve(ProbDist::make({1.0}), std::vector<double>{-1.0}), Error);
}

TEST_CASE("property: finite orders match the naive extended-precision formula") {
    Engine rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const ProbDist p = testing_support::random_with_zeros(rng, testing_support::uniform_size(rng, 1, 40));
        const double q = testing_support::uniform(rng, 0.0, 1.0) < 0.5 ? testing_support::uniform(rng, 0.05, 0.95)
                                                                        : testing_support::uniform(rng, 1.05, 20.0);
        const double want = oracle::renyi(p.weights(), q);
        CHECK(std::abs(renyi::renyi(p, EntropyOrder::of(q)) - want) <= 1e-13 * std::max(1.0, want));
    }
}

TEST_CASE("property: Shannon limit and continuity at the q = 1 threshold") {
    Engine rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const ProbDist p = testing_support::random_full_support(rng, testing_support::uniform_size(rng, 2, 30));
        const double s1 = renyi::renyi(p, EntropyOrder::one());
        CHECK(std::abs(s1 - oracle::shannon(p.weights())) <= 1e-14);
        for (double eps : {1e-8, 1e-6 * 1.01, 1e-5, 1e-3}) {
            const double scale = eps * 10.0 * std::max(1.0, s1 * s1 + 1.0);
            CHECK(std::abs(renyi::renyi(p, EntropyOrder::of(1.0 + eps)) - s1) <= scale);
            CHECK(std::abs(renyi::renyi(p, EntropyOrder::of(1.0 - eps)) - s1) <= scale);
        }
    }
}

TEST_CASE("property: S_q is non-increasing in q and bracketed by its limits") {
    Engine rng(23);
    std::vector<double> qs{0.0};
    for (int k = -40; k <= 40; ++k) qs.push_back(std::pow(10.0, k / 20.0));
    qs.push_back(kInf);
    for (int trial = 0; trial < 200; ++trial) {
        const ProbDist p = testing_support::random_with_zeros(rng, testing_support::uniform_size(rng, 1, 30));
        const double upper = std::log(static_cast<double>(p.size()));
        const auto curve = renyi_curve(p, qs);
        for (std::size_t k = 1; k < curve.size(); ++k) CHECK(curve[k].entropy <= curve[k - 1].entropy + 1e-12);
        for (const auto &pt : curve) {
            CHECK(pt.entropy >= 0.0);
            CHECK(pt.entropy <= upper);
            CHECK(pt.entropy <= curve.front().entropy + 1e-12);
            CHECK(pt.entropy >= curve.back().entropy - 1e-12);
        }
    }
}

TEST_CASE("maximum ln(dim) is reached only by the uniform distribution") {
    for (std::size_t n : {2u, 3u, 10u}) {
        std::vector<double> w = uniform(n);
        w[0] += 1e-3;
        const ProbDist near = ProbDist::make(w);
        for (double q : {0.5, 1.0, 2.0, kInf}) CHECK(renyi::renyi(near, EntropyOrder::of(q)) < std::log(static_cast<double>(n)));
        // S_0 only sees the support, which is still everything.
        CHECK(renyi::renyi(near, EntropyOrder::zero()) == std::log(static_cast<double>(n)));
    }
}

TEST_CASE("property: quantum entropy of diag(p) equals the classical one") {
    Engine rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const ProbDist p = testing_support::random_with_zeros(rng, testing_support::uniform_size(rng, 1, 16));
        const HermitianOperator rho = HermitianOperator::diagonal(p.weights());
        for (double q : {0.0, 0.5, 1.0, 2.0, 5.0, kInf})
            CHECK(std::abs(renyi_quantum(rho, EntropyOrder::of(q)) - renyi::renyi(p, EntropyOrder::of(q))) <= 1e-10);
    }
}

TEST_CASE("property: quantum entropy is unitarily invariant") {
    Engine rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = testing_support::uniform_size(rng, 2, 12);
        const ProbDist p = testing_support::random_full_support(rng, n);
        const HermitianOperator rho = testing_support::random_density(rng, n, p);
        const HermitianOperator rotated =
            HermitianOperator::make(testing_support::conjugate(testing_support::random_unitary(rng, n), rho.matrix()));
        for (double q : {0.5, 1.0, 2.0, kInf}) {
            CHECK(std::abs(renyi_quantum(rotated, EntropyOrder::of(q)) - renyi_quantum(rho, EntropyOrder::of(q))) <=
                  1e-8);
            CHECK(std::abs(renyi_quantum(rho, EntropyOrder::of(q)) - renyi::renyi(p, EntropyOrder::of(q))) <= 1e-8);
        }
    }
}
