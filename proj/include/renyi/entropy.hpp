#pragma once

#include <span>
#include <vector>

#include "renyi/distributions.hpp"
#include "renyi/spectral.hpp"

namespace renyi {

/// Orders with |q - 1| at or below this are evaluated as the Shannon limit.
inline constexpr double kQOneThreshold = 1e-6;

/// Order q of a Renyi entropy, with the three limits as distinct tags.
class EntropyOrder {
  public:
    enum class Kind { Zero, One, Infinity, Finite };

    static EntropyOrder zero() noexcept { return EntropyOrder(Kind::Zero, 0.0); }
    static EntropyOrder one() noexcept { return EntropyOrder(Kind::One, 1.0); }
    static EntropyOrder infinity() noexcept;

    /// Normalizing constructor: 0 -> Zero, +inf -> Infinity, |q-1| <= 1e-6 -> One.
    /// Negative or NaN q throws InvalidOrder.
    static EntropyOrder of(double q);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    /// The numeric order (0, 1, +inf or the finite q).
    [[nodiscard]] double value() const noexcept { return q_; }

    friend bool operator==(const EntropyOrder &, const EntropyOrder &) = default;

  private:
    EntropyOrder(Kind k, double q) noexcept : kind_(k), q_(q) {}
    Kind kind_;
    double q_;
};

/// Shannon entropy -sum p ln p in nats, with 0 ln 0 = 0.
double shannon(const ProbDist &p);

/// Renyi entropy S_q(p) in nats, clamped to [0, ln dim].
///
/// Finite orders near one use ln(1 + sum p_i expm1((q-1) ln p_i)) / (1-q),
/// which keeps full relative accuracy as q approaches the Shannon limit;
/// elsewhere ln sum p_i^q is evaluated in log-sum-exp form so large q
/// cannot underflow. Zero-probability entries are skipped.
double renyi(const ProbDist &p, EntropyOrder order);

/// Quantum Renyi entropy ln tr(rho^q) / (1 - q) via the spectrum of rho.
double renyi_quantum(const HermitianOperator &rho, EntropyOrder order,
                     Normalization mode = Normalization::Rescale);

struct CurvePoint {
    double q;
    double entropy;
};

/// S_q at each requested order, in input order. q may be +inf.
std::vector<CurvePoint> renyi_curve(const ProbDist &p, std::span<const double> qs);

} // namespace renyi
