#include "renyi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "renyi/error.hpp"

namespace renyi {

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::diagonal(std::span<const double> values) {
    SquareMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

SquareMatrix SquareMatrix::from_parts(std::size_t dim, std::span<const double> re, std::span<const double> im) {
    if (re.size() != dim * dim || (!im.empty() && im.size() != dim * dim))
        throw Error(ErrorKind::InvalidInput, "matrix parts do not have " + std::to_string(dim * dim) + " entries");
    SquareMatrix m(dim);
    for (std::size_t k = 0; k < dim * dim; ++k) m.data_[k] = Complex(re[k], im.empty() ? 0.0 : im[k]);
    return m;
}

SquareMatrix SquareMatrix::adjoint() const {
    SquareMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex SquareMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
    const std::size_t n = a.dim();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

double max_abs_difference(const SquareMatrix &a, const SquareMatrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

double max_abs(const SquareMatrix &a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j)));
    return worst;
}

HermitianOperator HermitianOperator::make(const SquareMatrix &m) {
    const std::size_t n = m.dim();
    if (n == 0) throw Error(ErrorKind::EmptyInput, "operator has dimension 0");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                throw Error(ErrorKind::NonFinite,
                            "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not finite");

    SquareMatrix sym(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double skew = std::abs(m(i, j) - std::conj(m(j, i)));
            if (!(skew <= kHermiticityTolerance))
                throw Error(ErrorKind::NotHermitian, "|A(" + std::to_string(i) + "," + std::to_string(j) +
                                                         ") - conj(A(" + std::to_string(j) + "," + std::to_string(i) +
                                                         "))| = " + std::to_string(skew));
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            sym(i, j) = i == j ? Complex(avg.real(), 0.0) : avg;
            sym(j, i) = std::conj(sym(i, j));
        }
    return HermitianOperator(std::move(sym));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
    return make(SquareMatrix::diagonal(values));
}

namespace {

double off_diagonal_norm(const SquareMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

double frobenius_norm(const SquareMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary J = diag(1, conj(w)) * R(c, s) acting on the
// (p, q) plane, where w is the phase of a(p, q): a <- J^dagger a J, v <- v J.
void rotate(SquareMatrix &a, SquareMatrix *v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex w = apq / mag;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (!std::isfinite(theta * theta)) t = 0.5 / std::abs(theta);
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = a.dim();
    const Complex cw = std::conj(w);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = a(k, p);
        const Complex y = a(k, q);
        a(k, p) = c * x - s * cw * y;
        a(k, q) = s * x + c * cw * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = a(p, k);
        const Complex y = a(q, k);
        a(p, k) = c * x - s * w * y;
        a(q, k) = s * x + c * w * y;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;

    if (v != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex x = (*v)(k, p);
            const Complex y = (*v)(k, q);
            (*v)(k, p) = c * x - s * cw * y;
            (*v)(k, q) = s * x + c * cw * y;
        }
    }
}

} // namespace

Spectrum eigh(const HermitianOperator &op, Eigenvectors mode) {
    SquareMatrix a = op.matrix();
    const std::size_t n = a.dim();
    std::optional<SquareMatrix> v;
    if (mode == Eigenvectors::Compute) v = SquareMatrix::identity(n);

    const double target = kJacobiConvergence * frobenius_norm(a);
    bool converged = false;
    for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) {
            converged = true;
            break;
        }
        if (sweep == kMaxJacobiSweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v ? &*v : nullptr, p, q);
    }
    if (!converged)
        throw Error(ErrorKind::NoConvergence,
                    "Jacobi did not converge within " + std::to_string(kMaxJacobiSweeps) + " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    Spectrum out;
    out.eigenvalues.reserve(n);
    for (std::size_t k : order) out.eigenvalues.push_back(a(k, k).real());
    if (v) {
        SquareMatrix sorted(n);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row) sorted(row, col) = (*v)(row, order[col]);
        out.eigenvectors = std::move(sorted);
    }
    return out;
}

HermitianOperator reconstruct(const SquareMatrix &vectors, std::span<const double> values) {
    const std::size_t n = vectors.dim();
    if (values.size() != n) throw Error(ErrorKind::InvalidInput, "eigenvalue count does not match dimension");
    SquareMatrix m(n);
    // Only the upper triangle is summed; the lower one is its exact conjugate.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += vectors(i, k) * values[k] * std::conj(vectors(j, k));
            m(i, j) = i == j ? Complex(acc.real(), 0.0) : acc;
            m(j, i) = std::conj(m(i, j));
        }
    return HermitianOperator(std::move(m));
}

ProbDist validate_density(const HermitianOperator &rho, Normalization mode) {
    std::vector<double> lambda = eigh(rho, Eigenvectors::Skip).eigenvalues;
    for (double &x : lambda) {
        if (x < -kEigenClipTolerance)
            throw Error(ErrorKind::NegativeEigenvalue, "eigenvalue " + std::to_string(x) + " is below -1e-8");
        x = std::max(x, 0.0);
    }
    if (mode == Normalization::Strict) {
        const double tr = rho.trace();
        if (!(std::abs(tr - 1.0) <= kTraceTolerance))
            throw Error(ErrorKind::TraceNotOne, "trace is " + std::to_string(tr));
    }
    return ProbDist::make(lambda, Normalization::Rescale);
}

HermitianOperator matrix_function(const HermitianOperator &a, const std::function<double(double)> &f) {
    Spectrum s = eigh(a, Eigenvectors::Compute);
    std::vector<double> fx(s.eigenvalues.size());
    for (std::size_t k = 0; k < fx.size(); ++k) {
        fx[k] = f(s.eigenvalues[k]);
        if (!std::isfinite(fx[k]))
            throw Error(ErrorKind::DomainError,
                        "function is not finite at eigenvalue " + std::to_string(s.eigenvalues[k]));
    }
    return reconstruct(*s.eigenvectors, fx);
}

} // namespace renyi
