#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "renyi/entropy.hpp"
#include "renyi/error.hpp"
#include "renyi/thermo.hpp"

namespace renyi {

/// Jackson q-derivative (f(qx) - f(x)) / (qx - x).
///
/// Refuses |q - 1| <= kQOneThreshold (DegenerateOrder) and x = 0 (ZeroPoint);
/// near q = 1 the caller should use an analytic derivative instead.
template <class Fn>
double q_derivative(Fn &&f, double x, double q) {
    if (!(q > 0.0) || !std::isfinite(q))
        throw Error(ErrorKind::InvalidOrder, "q must be finite and > 0, got " + std::to_string(q));
    if (std::abs(q - 1.0) <= kQOneThreshold)
        throw Error(ErrorKind::DegenerateOrder, "q = " + std::to_string(q) + " is within 1e-6 of 1");
    if (x == 0.0) throw Error(ErrorKind::ZeroPoint, "q-derivative at x = 0 has qx = x");
    const double qx = q * x;
    return (std::forward<Fn>(f)(qx) - f(x)) / (qx - x);
}

/// Both sides of S_{T0/T}(T0) = -(F(T) - F(T0)) / (T - T0).
struct RelationReport {
    double reference_temperature; ///< T0
    double temperature;           ///< T = T0 / q
    double q;
    double lhs;      ///< Renyi entropy of order q of the Gibbs state at T0
    double rhs;      ///< free-energy secant slope, negated
    double residual; ///< lhs - rhs, signed
};

/// Evaluates both sides at T = T0 / q. Throws NonpositiveTemperature or
/// DegenerateOrder (|q - 1| <= 1e-6).
RelationReport relation_check(const EnergySpectrum &e, double reference_temperature, double q);

/// Same as relation_check, parameterized by the target temperature (q = T0 / T).
RelationReport relation_at_temperature(const EnergySpectrum &e, double reference_temperature, double temperature);

/// Work-per-temperature-change functional after quenching T0 -> T0 / q:
/// -(F(T0/q) - F(T0)) / (T0/q - T0). Equals S_q of the initial Gibbs state.
double quench_ratio(const EnergySpectrum &e, double reference_temperature, double q);

/// -(F(T) - F(T0)) / (T - T0), computed from shifted log-partition values as
/// L(T) + T0 (L(T) - L(T0)) / (T - T0) so that no T ln Z products cancel.
/// Requires T != T0; no order threshold is applied.
double free_energy_secant(const EnergySpectrum &e, double reference_temperature, double temperature);

struct LimitStep {
    double delta;
    double secant;  ///< -(F(T0 + delta) - F(T0)) / delta
    double tangent; ///< von Neumann entropy at T0
    double gap;     ///< secant - tangent
};

/// Secant slopes approaching the tangent -dF/dT at T0. Each delta must be
/// non-zero with T0 + delta > 0.
std::vector<LimitStep> relation_limit_check(const EnergySpectrum &e, double reference_temperature,
                                            std::span<const double> deltas);

} // namespace renyi
