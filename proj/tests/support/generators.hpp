#pragma once

// Hand-rolled random generators for property tests. Every generator takes the
// engine by reference so a fixed seed reproduces a whole test run.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "renyi/distributions.hpp"
#include "renyi/spectral.hpp"

namespace testing_support {

using Engine = std::mt19937_64;

inline double uniform(Engine &rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline std::size_t uniform_size(Engine &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Full-support distribution; log-uniform raw weights give a wide dynamic range.
inline renyi::ProbDist random_full_support(Engine &rng, std::size_t dim) {
    std::vector<double> raw(dim);
    for (double &x : raw) x = std::exp(uniform(rng, -8.0, 0.0));
    return renyi::ProbDist::make(raw);
}

/// Distribution that may contain exact zeros (at least one positive entry).
inline renyi::ProbDist random_with_zeros(Engine &rng, std::size_t dim) {
    std::vector<double> raw(dim);
    for (double &x : raw) x = uniform(rng, 0.0, 1.0) < 0.3 ? 0.0 : uniform(rng, 0.0, 1.0);
    raw[uniform_size(rng, 0, dim - 1)] = uniform(rng, 0.1, 1.0);
    return renyi::ProbDist::make(raw);
}

inline std::vector<double> random_levels(Engine &rng, std::size_t dim, double lo, double hi) {
    std::vector<double> e(dim);
    for (double &x : e) x = uniform(rng, lo, hi);
    return e;
}

/// Product of random 2x2 unitaries acting on every coordinate pair, twice over.
inline renyi::SquareMatrix random_unitary(Engine &rng, std::size_t dim) {
    using C = std::complex<double>;
    renyi::SquareMatrix u = renyi::SquareMatrix::identity(dim);
    constexpr double pi = std::numbers::pi;
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t p = 0; p + 1 < dim; ++p)
            for (std::size_t q = p + 1; q < dim; ++q) {
                const double theta = uniform(rng, 0.0, pi);
                const C a = std::polar(std::cos(theta), uniform(rng, -pi, pi));
                const C b = std::polar(std::sin(theta), uniform(rng, -pi, pi));
                // columns p, q of u times [[a, -conj(b)], [b, conj(a)]]
                for (std::size_t k = 0; k < dim; ++k) {
                    const C x = u(k, p);
                    const C y = u(k, q);
                    u(k, p) = x * a + y * b;
                    u(k, q) = -x * std::conj(b) + y * std::conj(a);
                }
            }
    return u;
}

inline renyi::SquareMatrix conjugate(const renyi::SquareMatrix &u, const renyi::SquareMatrix &a) {
    return u * a * u.adjoint();
}

/// Entries uniform in [-scale, scale] (real and imaginary parts).
inline renyi::HermitianOperator random_hermitian(Engine &rng, std::size_t dim, double scale = 1.0) {
    renyi::SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            const double re = uniform(rng, -scale, scale);
            const double im = i == j ? 0.0 : uniform(rng, -scale, scale);
            m(i, j) = {re, im};
            m(j, i) = std::conj(m(i, j));
        }
    return renyi::HermitianOperator::make(m);
}

/// U diag(p) U^dagger for a random distribution p and random unitary U.
inline renyi::HermitianOperator random_density(Engine &rng, std::size_t dim, const renyi::ProbDist &p) {
    return renyi::HermitianOperator::make(
        conjugate(random_unitary(rng, dim), renyi::SquareMatrix::diagonal(p.weights())));
}

} // namespace testing_support
