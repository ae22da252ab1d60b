#include "renyi/qcalc.hpp"

#include <cmath>

namespace renyi {

namespace {

void require_nondegenerate(double q) {
    if (std::isnan(q) || q < 0.0) throw Error(ErrorKind::InvalidOrder, "q must be > 0, got " + std::to_string(q));
    if (std::abs(q - 1.0) <= kQOneThreshold)
        throw Error(ErrorKind::DegenerateOrder,
                    "q = " + std::to_string(q) + " is within 1e-6 of 1; use the tangent (von Neumann) instead");
}

} // namespace

double free_energy_secant(const EnergySpectrum &e, double reference_temperature, double temperature) {
    detail::require_positive_temperature(reference_temperature, "reference temperature");
    detail::require_positive_temperature(temperature);
    const double dt = temperature - reference_temperature;
    if (dt == 0.0) throw Error(ErrorKind::DegenerateOrder, "secant needs T != T0");
    const double l = detail::shifted_log_partition(e, temperature);
    const double l0 = detail::shifted_log_partition(e, reference_temperature);
    // T L(T) - T0 L(T0) = (T - T0) L(T) + T0 (L(T) - L(T0)); the ground energy cancels.
    return l + reference_temperature * ((l - l0) / dt);
}

namespace {

RelationReport make_report(const EnergySpectrum &e, double reference_temperature, double temperature, double q) {
    RelationReport r{};
    r.reference_temperature = reference_temperature;
    r.temperature = temperature;
    r.q = q;
    r.lhs = renyi(gibbs_state(e, reference_temperature), EntropyOrder::of(q));
    r.rhs = free_energy_secant(e, reference_temperature, temperature);
    r.residual = r.lhs - r.rhs;
    return r;
}

} // namespace

RelationReport relation_at_temperature(const EnergySpectrum &e, double reference_temperature, double temperature) {
    detail::require_positive_temperature(reference_temperature, "reference temperature");
    detail::require_positive_temperature(temperature);
    const double q = reference_temperature / temperature;
    require_nondegenerate(q);
    return make_report(e, reference_temperature, temperature, q);
}

RelationReport relation_check(const EnergySpectrum &e, double reference_temperature, double q) {
    detail::require_positive_temperature(reference_temperature, "reference temperature");
    require_nondegenerate(q);
    const double temperature = reference_temperature / q;
    detail::require_positive_temperature(temperature);
    return make_report(e, reference_temperature, temperature, q);
}

double quench_ratio(const EnergySpectrum &e, double reference_temperature, double q) {
    detail::require_positive_temperature(reference_temperature, "reference temperature");
    require_nondegenerate(q);
    return free_energy_secant(e, reference_temperature, reference_temperature / q);
}

std::vector<LimitStep> relation_limit_check(const EnergySpectrum &e, double reference_temperature,
                                            std::span<const double> deltas) {
    detail::require_positive_temperature(reference_temperature, "reference temperature");
    const double tangent = von_neumann_from_temperature(e, reference_temperature);
    std::vector<LimitStep> out;
    out.reserve(deltas.size());
    for (double d : deltas) {
        if (d == 0.0 || !std::isfinite(d))
            throw Error(ErrorKind::DegenerateOrder, "step must be finite and non-zero");
        const double secant = free_energy_secant(e, reference_temperature, reference_temperature + d);
        out.push_back({d, secant, tangent, secant - tangent});
    }
    return out;
}

} // namespace renyi
