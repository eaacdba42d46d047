// dynamics.hpp — Transition rates, population master equation, coherence decay

#pragma once

#include "lindblock/decomposition.hpp"
#include "lindblock/model.hpp"

#include <vector>

namespace lindblock {

// W(i, j) = λ²·G(ω_j - ω_i)·|S_ji|² is the rate of population flow j → i.
// Zero diagonal; total outflow from j is the j-th column sum.
struct RateMatrix {
    Eigen::MatrixXd rates;

    Eigen::Index dim() const { return rates.rows(); }
};

// Entries with |S_ij| ≤ ε_S are exact zeros, so cross-block rates vanish
// identically. epsilon_s < 0 selects the default threshold.
RateMatrix rate_matrix(const EigenSystem& eig, const SpectralFunction& reservoir,
                       double temperature, double coupling_strength,
                       double epsilon_s = -1.0);

// Density matrix in the eigenbasis.
struct DensityState {
    Matrix matrix;
    double time = 0.0;
};

// Hermitian within hermiticity_tol, trace 1 within trace_tol, eigenvalues down
// to eigenvalue_floor. Throws ValidationError otherwise.
void check_density_state(const DensityState& state, double hermiticity_tol = 1e-9,
                         double trace_tol = 1e-9, double eigenvalue_floor = -1e-9);

struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> populations;
    std::vector<Matrix> states;  // empty for population-only runs

    bool has_states() const { return !states.empty(); }
};

// Uniform grid 0, t_max/samples, ..., t_max (samples + 1 points).
std::vector<double> time_grid(double t_max, int samples);

// ṗ_i = Σ_j W(i,j) p_j - p_i Σ_j W(j,i).
Eigen::VectorXd population_derivative(const RateMatrix& rates, const Eigen::VectorXd& p);

// Integrate the population master equation with an adaptive Dormand-Prince
// stepper (relative tolerance 1e-9). The grid must be increasing from 0 and p0
// must be a probability vector.
Trajectory evolve_populations(const RateMatrix& rates, const Eigen::VectorXd& p0,
                              const std::vector<double>& times);

// Closed-form propagation through the eigendecomposition of the symmetrized
// rate generator. Requires detailed-balance rates (KMS reservoirs produce them
// by construction); used to cross-check the stepper.
Eigen::VectorXd propagate_populations_exact(const RateMatrix& rates,
                                            const Eigen::VectorXd& frequencies,
                                            double temperature,
                                            const Eigen::VectorXd& p0, double t);

// Γ(k1,k2) = ½ Σ_k (γ_{k,k1}|S_{k,k1}|² + γ_{k,k2}|S_{k,k2}|²) with
// γ_{a,b} = λ²G(ω_a - ω_b), the k = k1, k2 terms included. Symmetric,
// non-negative, zero diagonal by convention. Taken verbatim; a coupling
// operator proportional to the identity therefore still damps coherences,
// which a (S_kk - S_ll)² dephasing form would not (see README).
Eigen::MatrixXd coherence_decay_rates(const EigenSystem& eig, const SpectralFunction& reservoir,
                                      double temperature, double coupling_strength);

// Populations via evolve_populations; each coherence decays in closed form,
// ρ_{kl}(t) = ρ_{kl}(0)·exp(-Γ_{kl} t - i(ω_k - ω_l) t). Never stepped.
Trajectory evolve_density(const SystemModel& model, const DensityState& rho0,
                          const std::vector<double>& times);

}  // namespace lindblock
