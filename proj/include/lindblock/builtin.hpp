// builtin.hpp — Builtin example models: two two-level systems with a common dephasing-type reservoir

#pragma once

#include "lindblock/dynamics.hpp"
#include "lindblock/model.hpp"

#include <array>
#include <vector>

namespace lindblock {

// Two TLSs coupled to one reservoir through S = σ1z + a·σ2z, optionally with a
// rotating-wave dipole interaction Ω_R(σ1†σ2 + σ2†σ1). Product-basis order is
// fixed as (|e1e2⟩, |g1g2⟩, |e1g2⟩, |g1e2⟩) before eigen-sorting.
struct TwoTlsSpec {
    double omega1 = 1.0;
    double omega2 = 1.0;
    double rabi = 0.5;                // Ω_R, 0 for non-interacting
    double asymmetry = 0.5;           // a, the ratio of the two reservoir couplings
    double coupling_strength = 2.0;   // λ
    double temperature = 1.0;
    double g0 = 1.0;                  // flat-kms reservoir level

    // The defaults above: E3 - E4 = 2Ω_R = 1 = T and λ²·g0·|S_34|² = 1, so the
    // downhill rate inside the two-dimensional block is exactly the time unit.
    static TwoTlsSpec reference();
};

SystemModel two_tls_model(const TwoTlsSpec& spec);

// Closed-form eigenstructure. Indices follow the physical labelling:
// energies[0] = ω1 + ω2 (both excited), energies[1] = 0 (both ground),
// energies[2] and energies[3] the ± branches of the mixed pair.
struct TwoTlsAnalytics {
    std::array<double, 4> energies;
    double mixing_angle;                // φ
    std::array<double, 2> psi3_coeff;   // (cos φ, sin φ) on (|e1g2⟩, |g1e2⟩)
    std::array<double, 2> psi4_coeff;   // (-sin φ, cos φ)
};

// Errors when Ω_R = 0 and ω1 = ω2 (degenerate pair, mixing angle undefined).
TwoTlsAnalytics two_tls_analytics(const TwoTlsSpec& spec);

// The two-state rate system of the mixed block, normalized so the downhill
// rate is 1 and the uphill rate is exp(-1), plus the three initial conditions
// (p3, p4) used by the reference trajectory plots.
struct TwoStateBlockSetup {
    RateMatrix rates;                               // order (p3, p4)
    Eigen::Vector2d stationary;                     // (p3, p4) limit
    std::vector<Eigen::Vector2d> initial_conditions;
};

TwoStateBlockSetup two_state_block_setup();

}  // namespace lindblock
