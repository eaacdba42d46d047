// builtin.cpp — Two-TLS example models and their closed-form eigenstructure

#include "lindblock/builtin.hpp"

#include <cmath>
#include <stdexcept>

namespace lindblock {

TwoTlsSpec TwoTlsSpec::reference() { return TwoTlsSpec{}; }

SystemModel two_tls_model(const TwoTlsSpec& spec) {
    if (!(spec.omega1 > 0.0) || !(spec.omega2 > 0.0))
        throw ValidationError("two_tls_model: transition frequencies must be positive");

    // Product basis (|e1e2⟩, |g1g2⟩, |e1g2⟩, |g1e2⟩).
    SystemModel model;
    model.hamiltonian = Matrix::Zero(4, 4);
    model.hamiltonian(0, 0) = spec.omega1 + spec.omega2;
    model.hamiltonian(1, 1) = 0.0;
    model.hamiltonian(2, 2) = spec.omega1;
    model.hamiltonian(3, 3) = spec.omega2;
    model.hamiltonian(2, 3) = spec.rabi;
    model.hamiltonian(3, 2) = spec.rabi;

    // S = σ1z + a·σ2z is diagonal in the product basis.
    model.coupling_operator = Matrix::Zero(4, 4);
    model.coupling_operator(0, 0) = 1.0 + spec.asymmetry;
    model.coupling_operator(1, 1) = -(1.0 + spec.asymmetry);
    model.coupling_operator(2, 2) = 1.0 - spec.asymmetry;
    model.coupling_operator(3, 3) = -1.0 + spec.asymmetry;

    model.coupling_strength = spec.coupling_strength;
    model.temperature = spec.temperature;
    model.reservoir = SpectralFunction::flat_kms(spec.g0);
    check_model(model);
    return model;
}

TwoTlsAnalytics two_tls_analytics(const TwoTlsSpec& spec) {
    const double delta = spec.omega1 - spec.omega2;
    if (spec.rabi == 0.0 && delta == 0.0)
        throw ValidationError(
            "two_tls_analytics: the middle pair is degenerate for rabi = 0 and omega1 = omega2");

    const double root = std::sqrt(delta * delta / 4.0 + spec.rabi * spec.rabi);
    double phi;
    if (spec.rabi != 0.0) {
        phi = std::atan((root - delta / 2.0) / spec.rabi);
    } else {
        // Ω_R → 0 limit: no mixing for ω1 > ω2, a basis swap for ω1 < ω2.
        phi = delta > 0.0 ? 0.0 : M_PI / 2.0;
    }

    TwoTlsAnalytics analytics;
    analytics.energies = {spec.omega1 + spec.omega2, 0.0,
                          (spec.omega1 + spec.omega2) / 2.0 + root,
                          (spec.omega1 + spec.omega2) / 2.0 - root};
    analytics.mixing_angle = phi;
    analytics.psi3_coeff = {std::cos(phi), std::sin(phi)};
    analytics.psi4_coeff = {-std::sin(phi), std::cos(phi)};
    return analytics;
}

TwoStateBlockSetup two_state_block_setup() {
    TwoStateBlockSetup setup;
    // Two-state block of the reference model in units of the downhill rate:
    // flow p3 → p4 at rate 1, uphill at exp(-E/T) with E = T = 1.
    setup.rates.rates = Eigen::MatrixXd::Zero(2, 2);
    setup.rates.rates(1, 0) = 1.0;
    setup.rates.rates(0, 1) = std::exp(-1.0);
    const double z = 1.0 + std::exp(-1.0);
    setup.stationary = Eigen::Vector2d(std::exp(-1.0) / z, 1.0 / z);
    setup.initial_conditions = {Eigen::Vector2d(0.7, 0.3), Eigen::Vector2d(0.3, 0.7),
                                Eigen::Vector2d(0.1, 0.9)};
    return setup;
}

}  // namespace lindblock
