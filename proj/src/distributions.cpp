#include "renyi/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "renyi/detail/numeric.hpp"
#include "renyi/error.hpp"

namespace renyi {

namespace {

// A fresh quotient w_i / sum lands within ~4 half-ulps of unit total, so this
// band is wide enough that a normalized vector is always recognized as such.
double already_normalized_band(std::size_t n) {
    return static_cast<double>(n + 4) * std::numeric_limits<double>::epsilon();
}

} // namespace

ProbDist ProbDist::make(std::span<const double> raw, Normalization mode) {
    if (raw.empty()) throw Error(ErrorKind::EmptyInput, "probability vector has no entries");

    std::vector<double> w(raw.begin(), raw.end());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i]))
            throw Error(ErrorKind::NonFinite, "entry " + std::to_string(i) + " is not finite");
        if (w[i] < -kNegativityTolerance)
            throw Error(ErrorKind::NegativeWeight,
                        "entry " + std::to_string(i) + " = " + std::to_string(w[i]) + " is below -1e-12");
    }

    const double raw_total = detail::compensated_sum(raw);
    if (mode == Normalization::Strict && !(std::abs(raw_total - 1.0) <= kStrictNormalizationTolerance))
        throw Error(ErrorKind::NotNormalized,
                    "entries sum to " + std::to_string(raw_total) + ", more than 1e-9 away from 1");

    for (double &x : w) x = std::max(x, 0.0);

    double total = detail::compensated_sum(w);
    if (!std::isfinite(total)) {
        // Overflow (the compensation term turns it into NaN): pre-scale by the
        // largest entry so the total is representable.
        const double top = *std::max_element(w.begin(), w.end());
        for (double &x : w) x /= top;
        total = detail::compensated_sum(w);
    }
    if (!(total > 0.0)) throw Error(ErrorKind::NotNormalizable, "entries sum to zero");

    if (std::abs(total - 1.0) > already_normalized_band(w.size()))
        for (double &x : w) x /= total;

    return ProbDist(std::move(w));
}

std::size_t support_size(const ProbDist &p, double threshold) {
    const auto w = p.weights();
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [threshold](double x) { return x > threshold; }));
}

double max_weight(const ProbDist &p) noexcept {
    const auto w = p.weights();
    return *std::max_element(w.begin(), w.end());
}

} // namespace renyi
