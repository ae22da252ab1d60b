#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace renyi {

/// Entries in [-kNegativityTolerance, 0) are treated as round-off and clamp to zero.
inline constexpr double kNegativityTolerance = 1e-12;
/// Maximum |sum - 1| accepted by Normalization::Strict.
inline constexpr double kStrictNormalizationTolerance = 1e-9;

enum class Normalization {
    Rescale, ///< any positive total is rescaled to 1
    Strict,  ///< reject inputs whose total is further than 1e-9 from 1
};

/// A finite probability vector: non-negative, finite entries summing to one.
///
/// Instances only come out of `make`, so every ProbDist in circulation
/// satisfies the invariants. Values are immutable.
class ProbDist {
  public:
    /// Validates, clamps round-off negatives and rescales `raw` onto the simplex.
    ///
    /// Input already on the simplex to within a few ulps is kept bit-for-bit,
    /// which makes `make(make(x).weights())` reproduce `make(x)` exactly.
    /// Throws Error with EmptyInput, NonFinite, NegativeWeight, NotNormalizable
    /// or (strict mode only) NotNormalized.
    static ProbDist make(std::span<const double> raw, Normalization mode = Normalization::Rescale);
    static ProbDist make(std::initializer_list<double> raw, Normalization mode = Normalization::Rescale) {
        return make(std::span<const double>(raw.begin(), raw.size()), mode);
    }

    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return weights_[i]; }

    friend bool operator==(const ProbDist &, const ProbDist &) = default;

  private:
    explicit ProbDist(std::vector<double> w) : weights_(std::move(w)) {}
    std::vector<double> weights_;
};

/// Number of entries strictly greater than `threshold` (threshold >= 0).
std::size_t support_size(const ProbDist &p, double threshold = 0.0);

double max_weight(const ProbDist &p) noexcept;

} // namespace renyi
