#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "renyi/distributions.hpp"
#include "renyi/spectral.hpp"

namespace renyi {

/// Energy levels E_i of a finite system (k_B = 1, so energy and temperature share units).
class EnergySpectrum {
  public:
    /// Throws EmptyInput or NonFinite.
    static EnergySpectrum make(std::span<const double> levels);
    static EnergySpectrum make(std::initializer_list<double> levels) {
        return make(std::span<const double>(levels.begin(), levels.size()));
    }
    /// Eigenvalues of a Hamiltonian.
    static EnergySpectrum of(const HermitianOperator &hamiltonian);

    [[nodiscard]] std::span<const double> levels() const noexcept { return levels_; }
    [[nodiscard]] std::size_t size() const noexcept { return levels_.size(); }
    [[nodiscard]] double ground() const noexcept { return ground_; }

    /// Every level moved by the same constant.
    [[nodiscard]] EnergySpectrum shifted(double c) const;

  private:
    explicit EnergySpectrum(std::vector<double> levels);
    std::vector<double> levels_;
    double ground_;
};

struct ThermalPoint {
    double temperature;
    double log_partition; ///< ln Z, the stored primitive
    double free_energy;   ///< -T ln Z

    [[nodiscard]] double partition() const { return std::exp(log_partition); }
};

/// ln sum_i exp(-E_i / T), evaluated as -E_min/T + ln sum exp(-(E_i - E_min)/T).
double log_partition(const EnergySpectrum &e, double temperature);

ThermalPoint free_energy(const EnergySpectrum &e, double temperature);

/// Boltzmann weights exp(-E_i/T) / Z. Only differences E_i - E_min enter,
/// so an exactly representable shift of every level leaves the result bit-identical.
ProbDist gibbs_state(const EnergySpectrum &e, double temperature);

/// rho_T = exp(-H/T) / Z(T), built from one eigendecomposition of H.
HermitianOperator gibbs_state_quantum(const HermitianOperator &hamiltonian, double temperature);

/// Energies E_i = -T0 ln p_i for which p is the Gibbs state at T0 (with Z(T0) = 1).
/// Requires every p_i > 0 (ZeroProbability otherwise).
EnergySpectrum embed_distribution(const ProbDist &p, double reference_temperature);

/// Shannon entropy of the Gibbs state, i.e. -dF/dT at T.
double von_neumann_from_temperature(const EnergySpectrum &e, double temperature);

namespace detail {
/// Throws NonpositiveTemperature unless T is finite and > 0.
void require_positive_temperature(double temperature, const char *name = "temperature");
/// ln sum exp(-(E_i - E_min)/T); always in [0, ln n].
double shifted_log_partition(const EnergySpectrum &e, double temperature);
} // namespace detail

} // namespace renyi
