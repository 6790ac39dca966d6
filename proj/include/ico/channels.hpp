#pragma once

#include <vector>

#include "ico/density.hpp"

namespace ico {

/// Inverse temperature plus level structure of a thermal reservoir.
///
/// For a qubit the levels are {0, delta}; general d takes an explicit energy
/// list. beta = infinity (ground state) is a dedicated flag so that
/// r = e^{-beta*delta} stays exactly 0.
struct ThermalSpec {
    double beta = 0.0;              // >= 0; ignored when zero_temperature
    bool zero_temperature = false;  // beta -> infinity
    std::vector<double> energies;   // one entry per level

    static ThermalSpec qubit(double beta, double delta);
    static ThermalSpec qubit_ground(double delta);
    static ThermalSpec levels(double beta, std::vector<double> energies);

    int dim() const { return static_cast<int>(energies.size()); }
    /// Level gap E_1 - E_0 (qubit convention).
    double delta() const { return energies.at(1) - energies.at(0); }
    /// Boltzmann ratio e^{-beta*delta} for the qubit gap.
    double r() const;
    /// Partition function sum_j e^{-beta E_j} (levels counted from E_0).
    double partition() const;
};

/// CPTP channel in Kraus form. Construction checks completeness
/// sum_i K_i^dag K_i = I at kValidityTol.
class KrausChannel {
public:
    KrausChannel(int dim, std::vector<Matrix> kraus_ops);

    int dim() const { return dim_; }
    const std::vector<Matrix>& kraus_ops() const { return ops_; }

    /// N(rho) = sum_i K_i rho K_i^dag.
    DensityOperator apply(const DensityOperator& rho) const;

private:
    int dim_;
    std::vector<Matrix> ops_;
};

/// d^2 pairwise trace-orthogonal unitaries: the Pauli set for d = 2,
/// Heisenberg-Weyl X^a Z^b for larger d.
std::vector<Matrix> orthogonal_unitary_basis(int d);

/// Fully depolarizing channel, Kraus ops (1/d) U_i.
KrausChannel depolarizing(int d);

/// Thermal state T = diag(e^{-beta E_j}) / Z.
DensityOperator thermal_state(const ThermalSpec& spec);

/// Thermalizing channel, Kraus ops sqrt(1/d) A U_i with A = sqrt(T).
KrausChannel thermalizing(const ThermalSpec& spec);

/// Full isochoric thermalization: the output is thermal_state(spec).
DensityOperator classical_thermalize(const DensityOperator& rho,
                                     const ThermalSpec& spec);

}  // namespace ico
