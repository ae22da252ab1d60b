#include "renyi/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "renyi/detail/numeric.hpp"
#include "renyi/entropy.hpp"
#include "renyi/error.hpp"

namespace renyi {

EnergySpectrum::EnergySpectrum(std::vector<double> levels)
    : levels_(std::move(levels)), ground_(*std::min_element(levels_.begin(), levels_.end())) {}

EnergySpectrum EnergySpectrum::make(std::span<const double> levels) {
    if (levels.empty()) throw Error(ErrorKind::EmptyInput, "energy spectrum has no levels");
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (!std::isfinite(levels[i]))
            throw Error(ErrorKind::NonFinite, "energy level " + std::to_string(i) + " is not finite");
    return EnergySpectrum(std::vector<double>(levels.begin(), levels.end()));
}

EnergySpectrum EnergySpectrum::of(const HermitianOperator &hamiltonian) {
    return make(eigh(hamiltonian, Eigenvectors::Skip).eigenvalues);
}

EnergySpectrum EnergySpectrum::shifted(double c) const {
    std::vector<double> out(levels_);
    for (double &x : out) x += c;
    return make(out);
}

namespace detail {

void require_positive_temperature(double temperature, const char *name) {
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw Error(ErrorKind::NonpositiveTemperature,
                    std::string(name) + " must be finite and > 0, got " + std::to_string(temperature));
}

double shifted_log_partition(const EnergySpectrum &e, double temperature) {
    require_positive_temperature(temperature);
    std::vector<double> args;
    args.reserve(e.size());
    for (double x : e.levels()) args.push_back(-(x - e.ground()) / temperature);
    return log_sum_exp(args);
}

} // namespace detail

double log_partition(const EnergySpectrum &e, double temperature) {
    return -e.ground() / temperature + detail::shifted_log_partition(e, temperature);
}

ThermalPoint free_energy(const EnergySpectrum &e, double temperature) {
    const double ln_z = log_partition(e, temperature);
    return {temperature, ln_z, -temperature * ln_z};
}

ProbDist gibbs_state(const EnergySpectrum &e, double temperature) {
    const double ln_z = detail::shifted_log_partition(e, temperature);
    std::vector<double> w;
    w.reserve(e.size());
    for (double x : e.levels()) w.push_back(std::exp(-(x - e.ground()) / temperature - ln_z));
    return ProbDist::make(w);
}

HermitianOperator gibbs_state_quantum(const HermitianOperator &hamiltonian, double temperature) {
    detail::require_positive_temperature(temperature);
    Spectrum s = eigh(hamiltonian, Eigenvectors::Compute);
    const ProbDist weights = gibbs_state(EnergySpectrum::make(s.eigenvalues), temperature);
    return reconstruct(*s.eigenvectors, weights.weights());
}

EnergySpectrum embed_distribution(const ProbDist &p, double reference_temperature) {
    detail::require_positive_temperature(reference_temperature, "reference temperature");
    std::vector<double> e;
    e.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] > 0.0))
            throw Error(ErrorKind::ZeroProbability,
                        "entry " + std::to_string(i) + " is zero; a Gibbs embedding needs full support");
        e.push_back(-reference_temperature * std::log(p[i]));
    }
    return EnergySpectrum::make(e);
}

double von_neumann_from_temperature(const EnergySpectrum &e, double temperature) {
    return renyi(gibbs_state(e, temperature), EntropyOrder::one());
}

} // namespace renyi
