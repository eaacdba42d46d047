// coms.hpp — Constants of motion: block projectors, invariance residuals, brute-force oracle

#pragma once

#include "lindblock/decomposition.hpp"
#include "lindblock/model.hpp"

#include <string>
#include <vector>

namespace lindblock {

// Observable diagonal in the eigenbasis, I = Σ_k I_k |k⟩⟨k|.
struct DiagonalObservable {
    Eigen::VectorXd values;
};

// Basis constants of motion: one 0/1 indicator projector per invariant block.
// The projectors sum to the identity, so only L-1 of them are independent.
struct ComBasis {
    std::vector<DiagonalObservable> projectors;
    int independent_count = 0;
};

ComBasis basis_projectors(const SubspacePartition& part);

// Elementwise invariance condition: max over (k1, k2) of |S_{k1k2}|²·|I_{k1} - I_{k2}|.
// Zero (up to tolerance) exactly when the observable is a constant of motion.
double com_condition_residual(const EigenSystem& eig, const DiagonalObservable& obs);

// Max-magnitude entry of the full adjoint generator applied to the observable:
// unitary commutator plus the dissipator assembled jump by jump from the
// decomposition S = Σ S_{k1k2}|k1⟩⟨k2|. Vanishes on exactly the same
// observables as com_condition_residual (rates only rescale the terms).
double lindblad_residual(const SystemModel& model, const DiagonalObservable& obs);
double lindblad_residual(const EigenSystem& eig, const SpectralFunction& reservoir,
                         double temperature, double coupling_strength,
                         const DiagonalObservable& obs);

// Default acceptance tolerance for the elementwise condition: 1e-10 × max|S_ij|²
// (the residual scales with |S|² and with the spread of the observable values).
double default_com_tolerance(const EigenSystem& eig);

// Enumerates all 2^N diagonal 0/1 observables, keeps the ones satisfying the
// invariance condition, and refines their level sets into the atoms of the
// lattice they generate. Independent oracle for invariant_partition; N ≤ 16.
SubspacePartition brute_force_com_atoms(const EigenSystem& eig, double tolerance = -1.0);

struct NamedCom {
    std::string name;
    DiagonalObservable observable;
};

// The physically named constants of motion of the builtin two-TLS models:
// excitation number, total population inversion, and (non-interacting only)
// the total energy. Requires N = 4 and eigenfrequencies laid out as the
// builtin generator produces them.
std::vector<NamedCom> named_coms_two_tls(const EigenSystem& eig,
                                         const SubspacePartition& part,
                                         bool interacting);

// Total-energy observable of a two-TLS model. Throws ValidationError for an
// interacting model, where the Hamiltonian is no longer a constant of motion.
DiagonalObservable two_tls_energy_com(const EigenSystem& eig, bool interacting);

}  // namespace lindblock
