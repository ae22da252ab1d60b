#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "renyi/distributions.hpp"

namespace renyi {

using Complex = std::complex<double>;

/// max |A_ij - conj(A_ji)| accepted before an operator counts as non-Hermitian.
inline constexpr double kHermiticityTolerance = 1e-9;
/// Density-matrix eigenvalues in [-kEigenClipTolerance, 0) are clipped to zero.
inline constexpr double kEigenClipTolerance = 1e-8;
/// Strict-mode bound on |tr(rho) - 1|.
inline constexpr double kTraceTolerance = 1e-8;
/// ||A - V diag(lambda) V^dagger||_max bound, relative to max(1, ||A||_max).
inline constexpr double kReconstructionTolerance = 1e-9;
inline constexpr int kMaxJacobiSweeps = 100;
/// Jacobi stops once the off-diagonal Frobenius norm drops below this fraction of ||A||_F.
inline constexpr double kJacobiConvergence = 1e-12;

/// Dense complex square matrix, row-major.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static SquareMatrix identity(std::size_t dim);
    static SquareMatrix diagonal(std::span<const double> values);
    /// Builds re + i*im from row-major real parts; `im` may be empty for a real matrix.
    static SquareMatrix from_parts(std::size_t dim, std::span<const double> re, std::span<const double> im = {});

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    [[nodiscard]] SquareMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;

    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b);

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b (matrices must share a dimension).
double max_abs_difference(const SquareMatrix &a, const SquareMatrix &b);
double max_abs(const SquareMatrix &a);

/// A validated self-adjoint matrix: the Hamiltonian H or a density matrix rho.
///
/// `make` rejects non-finite entries and anything further than
/// kHermiticityTolerance from Hermitian, then stores (A + A^dagger)/2 so the
/// held matrix is exactly Hermitian.
class HermitianOperator {
  public:
    static HermitianOperator make(const SquareMatrix &m);
    static HermitianOperator diagonal(std::span<const double> values);

    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] const SquareMatrix &matrix() const noexcept { return m_; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    [[nodiscard]] double trace() const { return m_.trace().real(); }

  private:
    explicit HermitianOperator(SquareMatrix m) : m_(std::move(m)) {}
    friend HermitianOperator reconstruct(const SquareMatrix &, std::span<const double>);
    SquareMatrix m_;
};

struct Spectrum {
    std::vector<double> eigenvalues;          ///< non-increasing
    std::optional<SquareMatrix> eigenvectors; ///< column k pairs with eigenvalues[k]
};

enum class Eigenvectors { Compute, Skip };

/// Cyclic complex Jacobi diagonalization.
///
/// Each rotation first removes the phase of A_pq, then applies the real
/// symmetric Jacobi rotation to the (p, q) plane. Throws NoConvergence if the
/// off-diagonal norm is still above target after kMaxJacobiSweeps sweeps.
Spectrum eigh(const HermitianOperator &a, Eigenvectors mode = Eigenvectors::Compute);

/// V diag(values) V^dagger, exactly Hermitian by construction.
HermitianOperator reconstruct(const SquareMatrix &vectors, std::span<const double> values);

/// Eigenvalues of rho as a probability distribution (non-increasing order).
///
/// Eigenvalues in [-1e-8, 0) clip to zero; anything lower raises
/// NegativeEigenvalue. Strict mode additionally demands |tr rho - 1| <= 1e-8,
/// otherwise the spectrum is renormalized.
ProbDist validate_density(const HermitianOperator &rho, Normalization mode = Normalization::Rescale);

/// f(A) = V diag(f(lambda)) V^dagger. Raises DomainError if f yields a
/// non-finite value at any eigenvalue (ln at 0, for instance).
HermitianOperator matrix_function(const HermitianOperator &a, const std::function<double(double)> &f);

} // namespace renyi
