#include "renyi/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "renyi/detail/numeric.hpp"
#include "renyi/error.hpp"

namespace renyi {

EntropyOrder EntropyOrder::infinity() noexcept {
    return EntropyOrder(Kind::Infinity, std::numeric_limits<double>::infinity());
}

EntropyOrder EntropyOrder::of(double q) {
    if (std::isnan(q) || q < 0.0) throw Error(ErrorKind::InvalidOrder, "order must be >= 0, got " + std::to_string(q));
    if (q == 0.0) return zero();
    if (std::isinf(q)) return infinity();
    if (std::abs(q - 1.0) <= kQOneThreshold) return one();
    return EntropyOrder(Kind::Finite, q);
}

double shannon(const ProbDist &p) {
    detail::CompensatedSum acc;
    for (double x : p.weights())
        if (x > 0.0) acc.add(-x * std::log(x));
    return acc.value();
}

namespace {

// Below this distance from one the expm1 form is used for sum p_i^q.
constexpr double kNearOneBand = 0.5;

double finite_order(const ProbDist &p, double q) {
    std::vector<double> logs;
    logs.reserve(p.size());
    for (double x : p.weights())
        if (x > 0.0) logs.push_back(std::log(x));

    const double qm1 = q - 1.0;
    if (std::abs(qm1) < kNearOneBand) {
        // sum p^q - 1 = sum p (p^(q-1) - 1)
        detail::CompensatedSum acc;
        for (double lp : logs) acc.add(std::exp(lp) * std::expm1(qm1 * lp));
        return std::log1p(acc.value()) / (1.0 - q);
    }
    for (double &lp : logs) lp *= q;
    return detail::log_sum_exp(logs) / (1.0 - q);
}

// Every order of a distribution uniform on k points equals ln k; returns k, or 0
// when the positive weights are not all equal.
std::size_t uniform_support(const ProbDist &p) {
    double first = 0.0;
    std::size_t k = 0;
    for (double x : p.weights()) {
        if (x == 0.0) continue;
        if (k == 0) first = x;
        else if (x != first) return 0;
        ++k;
    }
    return k;
}

} // namespace

double renyi(const ProbDist &p, EntropyOrder order) {
    if (const std::size_t k = uniform_support(p); k > 0) return std::log(static_cast<double>(k));
    double s = 0.0;
    switch (order.kind()) {
    case EntropyOrder::Kind::Zero: s = std::log(static_cast<double>(support_size(p, 0.0))); break;
    case EntropyOrder::Kind::One: s = shannon(p); break;
    case EntropyOrder::Kind::Infinity: s = -std::log(max_weight(p)); break;
    case EntropyOrder::Kind::Finite: s = finite_order(p, order.value()); break;
    }
    return std::clamp(s, 0.0, std::log(static_cast<double>(p.size())));
}

double renyi_quantum(const HermitianOperator &rho, EntropyOrder order, Normalization mode) {
    return renyi(validate_density(rho, mode), order);
}

std::vector<CurvePoint> renyi_curve(const ProbDist &p, std::span<const double> qs) {
    std::vector<CurvePoint> out;
    out.reserve(qs.size());
    for (double q : qs) out.push_back({q, renyi(p, EntropyOrder::of(q))});
    return out;
}

} // namespace renyi
