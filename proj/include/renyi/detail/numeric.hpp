#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace renyi::detail {

// Neumaier's variant of Kahan summation. The compensation term also
// captures the low-order bits lost when a summand exceeds the running total.
class CompensatedSum {
  public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + carry_; }

  private:
    double sum_   = 0.0;
    double carry_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

// log(sum_i exp(args[i])), shifted by the largest argument.
// Returns -inf for an empty range or when every argument is -inf.
inline double log_sum_exp(std::span<const double> args) noexcept {
    if (args.empty()) return -std::numeric_limits<double>::infinity();
    const double top = *std::max_element(args.begin(), args.end());
    if (!std::isfinite(top)) return top;
    CompensatedSum acc;
    for (double a : args) acc.add(std::exp(a - top));
    return top + std::log(acc.value());
}

} // namespace renyi::detail
