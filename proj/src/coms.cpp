// coms.cpp — Block projectors, invariance residuals, exhaustive enumeration oracle

#include "lindblock/coms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace lindblock {

ComBasis basis_projectors(const SubspacePartition& part) {
    const auto n = part.dim();
    ComBasis basis;
    basis.projectors.reserve(part.blocks.size());
    for (const auto& block : part.blocks) {
        DiagonalObservable proj;
        proj.values = Eigen::VectorXd::Zero(n);
        for (int i : block) proj.values(i) = 1.0;
        basis.projectors.push_back(std::move(proj));
    }
    basis.independent_count = static_cast<int>(part.blocks.size()) - 1;
    return basis;
}

double com_condition_residual(const EigenSystem& eig, const DiagonalObservable& obs) {
    const auto n = eig.dim();
    if (obs.values.size() != n)
        throw std::invalid_argument("com_condition_residual: observable dimension mismatch");
    const Matrix& s = eig.coupling_in_eigenbasis;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double coupling = std::norm(s(i, j));
            worst = std::max(worst, coupling * std::abs(obs.values(i) - obs.values(j)));
        }
    return worst;
}

double lindblad_residual(const EigenSystem& eig, const SpectralFunction& reservoir,
                         double temperature, double coupling_strength,
                         const DiagonalObservable& obs) {
    const auto n = eig.dim();
    if (obs.values.size() != n)
        throw std::invalid_argument("lindblad_residual: observable dimension mismatch");
    const Matrix& s = eig.coupling_in_eigenbasis;
    const double lambda2 = coupling_strength * coupling_strength;

    Matrix observable = Matrix::Zero(n, n);
    observable.diagonal() = obs.values.cast<std::complex<double>>();
    Matrix h = Matrix::Zero(n, n);
    h.diagonal() = eig.frequencies.cast<std::complex<double>>();

    // Adjoint generator: i[H, I] plus one dissipator term per jump
    // S_ab |a⟩⟨b|, the jump b → a entering with rate λ²G(ω_b - ω_a).
    Matrix out = std::complex<double>(0.0, 1.0) * (h * observable - observable * h);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
            if (s(a, b) == std::complex<double>(0.0, 0.0)) continue;
            const double rate =
                lambda2 * reservoir.value(eig.frequencies(b) - eig.frequencies(a), temperature);
            Matrix jump = Matrix::Zero(n, n);
            jump(a, b) = s(a, b);
            const Matrix jd = jump.adjoint();
            out += rate * (jd * observable * jump -
                           0.5 * (jd * jump * observable + observable * jd * jump));
        }
    return out.cwiseAbs().maxCoeff();
}

double lindblad_residual(const SystemModel& model, const DiagonalObservable& obs) {
    return lindblad_residual(eigenbasis(model), model.reservoir, model.temperature,
                             model.coupling_strength, obs);
}

double default_com_tolerance(const EigenSystem& eig) {
    const double smax = eig.coupling_in_eigenbasis.size() == 0
                            ? 0.0
                            : eig.coupling_in_eigenbasis.cwiseAbs().maxCoeff();
    return 1e-10 * smax * smax;
}

SubspacePartition brute_force_com_atoms(const EigenSystem& eig, double tolerance) {
    const auto n = eig.dim();
    if (n > 16)
        throw std::invalid_argument("brute_force_com_atoms: enumeration guard, N must be <= 16");
    if (tolerance < 0.0) tolerance = default_com_tolerance(eig);

    // Refine {0..N-1} by the level sets of every accepted 0/1 observable. Each
    // accepted mask splits every current class into in-mask and out-of-mask
    // halves; what survives all splits are the atoms.
    std::vector<std::uint32_t> classes{(1u << n) - 1u};

    DiagonalObservable candidate;
    candidate.values = Eigen::VectorXd::Zero(n);
    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = 1; mask + 1 < total; ++mask) {
        for (Eigen::Index i = 0; i < n; ++i)
            candidate.values(i) = (mask >> i) & 1u ? 1.0 : 0.0;
        if (com_condition_residual(eig, candidate) > tolerance) continue;
        std::vector<std::uint32_t> refined;
        refined.reserve(classes.size() + 1);
        for (std::uint32_t cls : classes) {
            const std::uint32_t inside = cls & mask;
            const std::uint32_t outside = cls & ~mask;
            if (inside) refined.push_back(inside);
            if (outside) refined.push_back(outside);
        }
        classes = std::move(refined);
    }

    std::vector<std::vector<int>> blocks;
    for (std::uint32_t cls : classes) {
        std::vector<int> block;
        for (Eigen::Index i = 0; i < n; ++i)
            if ((cls >> i) & 1u) block.push_back(static_cast<int>(i));
        blocks.push_back(std::move(block));
    }
    return partition_from_blocks(std::move(blocks), n, tolerance);
}

namespace {

// The builtin two-TLS models carry eigenfrequencies 0 < E4 <= E3 < omega1+omega2,
// so the physical labels follow from ranking: psi2 lowest, psi1 highest, psi3
// the larger of the two middle states.
struct TwoTlsStateIndices {
    Eigen::Index psi1, psi2, psi3, psi4;
};

TwoTlsStateIndices identify_two_tls_states(const EigenSystem& eig) {
    if (eig.dim() != 4)
        throw std::invalid_argument("named two-TLS observables need a four-level eigensystem");
    // Frequencies are sorted ascending by construction.
    return TwoTlsStateIndices{3, 0, 2, 1};
}

}  // namespace

DiagonalObservable two_tls_energy_com(const EigenSystem& eig, bool interacting) {
    if (interacting)
        throw ValidationError(
            "total energy is not a constant of motion for the interacting two-TLS model");
    identify_two_tls_states(eig);
    return DiagonalObservable{eig.frequencies};
}

std::vector<NamedCom> named_coms_two_tls(const EigenSystem& eig, const SubspacePartition& part,
                                         bool interacting) {
    const auto states = identify_two_tls_states(eig);
    if (part.dim() != 4)
        throw std::invalid_argument("named_coms_two_tls: partition dimension mismatch");

    std::vector<NamedCom> named;
    {
        DiagonalObservable excitation;
        excitation.values = Eigen::VectorXd::Zero(4);
        excitation.values(states.psi1) = 2.0;
        excitation.values(states.psi3) = 1.0;
        excitation.values(states.psi4) = 1.0;
        named.push_back({"excitation_number", std::move(excitation)});
    }
    {
        DiagonalObservable inversion;
        inversion.values = Eigen::VectorXd::Zero(4);
        inversion.values(states.psi1) = 2.0;
        inversion.values(states.psi2) = -2.0;
        named.push_back({"population_inversion", std::move(inversion)});
    }
    if (!interacting) named.push_back({"total_energy", two_tls_energy_com(eig, false)});

    const double tol = default_com_tolerance(eig);
    for (const auto& com : named)
        if (com_condition_residual(eig, com.observable) > tol)
            throw ValidationError("named two-TLS observable \"" + com.name +
                                  "\" fails the invariance condition; the eigensystem does not "
                                  "look like a builtin two-TLS model");
    return named;
}

}  // namespace lindblock
