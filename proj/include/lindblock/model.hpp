// model.hpp — Open-system model: Hamiltonian, coupling operator, reservoir spectral function

#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lindblock {

using Matrix = Eigen::MatrixXcd;

// Input could not be understood (JSON syntax, wrong shapes, missing keys).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input was understood but violates a model invariant (non-Hermitian matrix,
// non-positive temperature, degenerate spectrum, malformed spectral table).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double hermiticity = 1e-10;  // relative to the max-magnitude entry
    double degeneracy = 1e-9;    // relative to the spectral range
};

enum class SpectralFamily { FlatKms, OhmicThermal, Tabulated };

// Reservoir spectral function G(ω), stored on the non-negative half-line only.
// Values at ω < 0 are produced by KMS completion, G(-ω) = exp(-ω/T) G(ω), so the
// KMS identity holds by construction for every loadable reservoir.
class SpectralFunction {
public:
    SpectralFunction() = default;

    static SpectralFunction flat_kms(double g0);
    static SpectralFunction ohmic_thermal(double eta, double omega_c);
    // Samples (ω ≥ 0, G ≥ 0) with strictly increasing ω; linear interpolation
    // inside [ω_first, ω_last], queries outside the range are an error.
    static SpectralFunction tabulated(std::vector<std::pair<double, double>> samples);
    // Negative-control seam for the validator: the table may span negative ω and
    // is interpolated verbatim, bypassing KMS completion. Model files can never
    // produce this variant.
    static SpectralFunction tabulated_raw(std::vector<std::pair<double, double>> samples);

    SpectralFamily family() const { return family_; }
    bool kms_by_construction() const { return !raw_; }
    double g0() const { return g0_; }
    double eta() const { return eta_; }
    double omega_c() const { return omega_c_; }
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }

    // G(ω) at reservoir temperature T (energy units, k_B = 1).
    double value(double omega, double temperature) const;

private:
    SpectralFamily family_ = SpectralFamily::FlatKms;
    double g0_ = 1.0;
    double eta_ = 0.0;
    double omega_c_ = 0.0;
    std::vector<std::pair<double, double>> samples_;
    bool raw_ = false;
};

struct SystemModel {
    Matrix hamiltonian;              // Hermitian, energy units (ħ = k_B = 1)
    Matrix coupling_operator;        // Hermitian, dimensionless
    double coupling_strength = 1.0;  // λ ≥ 0, frequency units
    SpectralFunction reservoir;
    double temperature = 1.0;        // T > 0
    Tolerances tolerances;

    Eigen::Index dim() const { return hamiltonian.rows(); }
};

// Hamiltonian eigenbasis with the coupling operator conjugated into it.
struct EigenSystem {
    Eigen::VectorXd frequencies;    // strictly increasing
    Matrix basis_transform;         // B maps input-basis components to eigenbasis ones
    Matrix coupling_in_eigenbasis;  // S_eig = B S B†, exactly Hermitian
    Tolerances tolerances;

    Eigen::Index dim() const { return frequencies.size(); }
};

struct ValidationCheck {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    std::string detail;  // set only when a check could not be evaluated cleanly
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
};

// Throws ValidationError if any SystemModel invariant fails.
void check_model(const SystemModel& model);

// Parse and validate a model document (see README for the JSON schema).
SystemModel load_model(const std::string& json_text);
SystemModel load_model_file(const std::string& path);

// Diagonalize the Hamiltonian and conjugate the coupling operator. An exactly
// diagonal Hamiltonian is only reordered, so the transform stays a permutation
// (the identity when the diagonal is already sorted). Degenerate spectra are a
// hard error naming the colliding levels.
EigenSystem eigenbasis(const SystemModel& model);

double spectral_value(const SpectralFunction& reservoir, double temperature, double omega);

// Aggregate pass/fail report: Hermiticity of both matrices, spectral
// non-degeneracy, KMS identity and positivity of G on a frequency sample.
ValidationReport validate(const SystemModel& model);

}  // namespace lindblock
