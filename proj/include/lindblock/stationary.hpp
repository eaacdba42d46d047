// stationary.hpp — Stationary family: per-block Gibbs states weighted by initial block traces

#pragma once

#include "lindblock/decomposition.hpp"
#include "lindblock/dynamics.hpp"
#include "lindblock/model.hpp"

#include <vector>

namespace lindblock {

struct StationaryPrediction {
    Eigen::VectorXd weights;                  // one per block, convex
    std::vector<Eigen::VectorXd> block_gibbs; // per-block distributions, each sums to 1
    DensityState assembled;                   // diagonal density matrix

    Eigen::VectorXd assembled_populations() const;
};

// p_i ∝ exp(-ω_i/T) over an arbitrary frequency set, max-shifted for overflow
// safety.
Eigen::VectorXd gibbs_distribution(const Eigen::VectorXd& frequencies, double temperature);

// Full-spectrum Gibbs state of the eigensystem.
Eigen::VectorXd gibbs_state(const EigenSystem& eig, double temperature);

// λ_l = Σ_{i ∈ B_l} Re ρ0_ii. The initial state must have unit trace.
Eigen::VectorXd block_weights(const SubspacePartition& part, const DensityState& rho0);

// Assemble the stationary state reached from ρ0: each block carries its own
// Gibbs distribution scaled by the initial block trace; singleton blocks keep
// their population unchanged.
StationaryPrediction stationary_state(const SystemModel& model, const DensityState& rho0);
StationaryPrediction stationary_state(const EigenSystem& eig, const SubspacePartition& part,
                                      double temperature, const DensityState& rho0);

// Independent oracle: per-block kernel of the restricted rate generator via
// SVD (threshold 1e-10 × largest singular value). Errors if any block kernel
// is not one-dimensional.
std::vector<Eigen::VectorXd> null_space_stationary(const RateMatrix& rates,
                                                   const SubspacePartition& part);

}  // namespace lindblock
