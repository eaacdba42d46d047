// helpers.hpp — Test-only model generators and independent oracles

#pragma once

#include "lindblock/builtin.hpp"
#include "lindblock/decomposition.hpp"
#include "lindblock/model.hpp"

#include <algorithm>
#include <complex>
#include <random>
#include <set>
#include <vector>

namespace lindblock::testing {

// Sorted frequencies on [0, span] with every gap at least min_gap.
inline Eigen::VectorXd random_frequencies(std::mt19937& rng, int n, double span = 2.0,
                                          double min_gap = 0.05) {
    std::uniform_real_distribution<double> uniform(0.0, span);
    Eigen::VectorXd freqs(n);
    while (true) {
        for (int i = 0; i < n; ++i) freqs(i) = uniform(rng);
        std::sort(freqs.data(), freqs.data() + n);
        bool ok = true;
        for (int i = 0; i + 1 < n; ++i)
            if (freqs(i + 1) - freqs(i) < min_gap) ok = false;
        if (ok) return freqs;
    }
}

// Hermitian coupling with off-diagonal magnitudes in [0.3, 1] kept with
// probability `density`, and O(1) real diagonal entries.
inline Matrix random_coupling(std::mt19937& rng, int n, double density = 0.5) {
    std::uniform_real_distribution<double> magnitude(0.3, 1.0);
    std::uniform_real_distribution<double> diag(0.8, 1.2);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::bernoulli_distribution keep(density);
    Matrix s = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        s(i, i) = diag(rng);
        for (int j = i + 1; j < n; ++j) {
            if (!keep(rng)) continue;
            const std::complex<double> value =
                magnitude(rng) * std::exp(std::complex<double>(0.0, phase(rng)));
            s(i, j) = value;
            s(j, i) = std::conj(value);
        }
    }
    return s;
}

// Random partition of {0..n-1} into contiguous-size chunks of random membership.
inline std::vector<std::vector<int>> random_blocks(std::mt19937& rng, int n, int max_block = 4) {
    std::vector<int> indices(n);
    for (int i = 0; i < n; ++i) indices[i] = i;
    std::shuffle(indices.begin(), indices.end(), rng);
    std::vector<std::vector<int>> blocks;
    std::uniform_int_distribution<int> size_dist(1, max_block);
    std::size_t at = 0;
    while (at < indices.size()) {
        const auto take = std::min<std::size_t>(size_dist(rng), indices.size() - at);
        blocks.emplace_back(indices.begin() + at, indices.begin() + at + take);
        at += take;
    }
    return blocks;
}

// Hermitian coupling that is exactly block-diagonal over the given blocks and
// connected inside each (chain edges plus nonzero diagonals).
inline Matrix block_structured_coupling(std::mt19937& rng, int n,
                                        const std::vector<std::vector<int>>& blocks) {
    std::uniform_real_distribution<double> magnitude(0.3, 1.0);
    std::uniform_real_distribution<double> diag(0.8, 1.2);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    Matrix s = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) s(i, i) = diag(rng);
    for (const auto& block : blocks)
        for (std::size_t k = 0; k + 1 < block.size(); ++k) {
            const std::complex<double> value =
                magnitude(rng) * std::exp(std::complex<double>(0.0, phase(rng)));
            s(block[k], block[k + 1]) = value;
            s(block[k + 1], block[k]) = std::conj(value);
        }
    return s;
}

inline SystemModel model_from_parts(const Eigen::VectorXd& freqs, const Matrix& coupling,
                                    double lambda = 1.0, double temperature = 1.0,
                                    SpectralFunction reservoir = SpectralFunction::flat_kms(1.0)) {
    SystemModel model;
    model.hamiltonian = Matrix::Zero(freqs.size(), freqs.size());
    model.hamiltonian.diagonal() = freqs.cast<std::complex<double>>();
    model.coupling_operator = coupling;
    model.coupling_strength = lambda;
    model.temperature = temperature;
    model.reservoir = std::move(reservoir);
    return model;
}

// Random density matrix: normalized A A† mixed with a touch of identity so the
// spectrum stays safely positive.
inline Matrix random_density(std::mt19937& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    Matrix rho = a * a.adjoint();
    rho += 0.05 * Matrix::Identity(n, n);
    rho /= rho.trace().real();
    return rho;
}

// Literal reachability closure: grow each subspace by repeatedly applying the
// coupling matrix to its members until no new basis vectors appear. Written as
// direct set expansion to stay independent of the production traversal.
inline std::vector<std::vector<int>> closure_partition(const Matrix& s, double threshold) {
    const int n = static_cast<int>(s.rows());
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<int>> blocks;
    for (int seed = 0; seed < n; ++seed) {
        if (assigned[seed]) continue;
        std::set<int> members{seed};
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<int> next = members;
            for (int m : members)
                for (int k = 0; k < n; ++k)
                    if (std::abs(s(k, m)) > threshold && next.insert(k).second) grew = true;
            members = std::move(next);
        }
        std::vector<int> block(members.begin(), members.end());
        for (int m : block) assigned[m] = true;
        blocks.push_back(std::move(block));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

// Dense Schrödinger-picture generator assembled jump by jump; diagonal of the
// result is the reference for the population derivative.
inline Matrix apply_generator_dense(const EigenSystem& eig, const SpectralFunction& reservoir,
                                    double temperature, double lambda, const Matrix& rho) {
    const auto n = eig.dim();
    Matrix h = Matrix::Zero(n, n);
    h.diagonal() = eig.frequencies.cast<std::complex<double>>();
    Matrix out = std::complex<double>(0.0, -1.0) * (h * rho - rho * h);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
            const std::complex<double> element = eig.coupling_in_eigenbasis(a, b);
            if (element == std::complex<double>(0.0, 0.0)) continue;
            const double rate = lambda * lambda *
                                reservoir.value(eig.frequencies(b) - eig.frequencies(a), temperature);
            Matrix jump = Matrix::Zero(n, n);
            jump(a, b) = element;
            const Matrix jd = jump.adjoint();
            out += rate *
                   (jump * rho * jd - 0.5 * (jd * jump * rho + rho * jd * jump));
        }
    return out;
}

// Fixed-step fourth-order integrator over the dense generator; the slow
// reference the adaptive production stepper is checked against.
inline Matrix integrate_density_rk4(const EigenSystem& eig, const SpectralFunction& reservoir,
                                    double temperature, double lambda, Matrix rho, double t_final,
                                    int steps) {
    const double dt = t_final / steps;
    for (int k = 0; k < steps; ++k) {
        const Matrix k1 = apply_generator_dense(eig, reservoir, temperature, lambda, rho);
        const Matrix k2 =
            apply_generator_dense(eig, reservoir, temperature, lambda, rho + 0.5 * dt * k1);
        const Matrix k3 =
            apply_generator_dense(eig, reservoir, temperature, lambda, rho + 0.5 * dt * k2);
        const Matrix k4 = apply_generator_dense(eig, reservoir, temperature, lambda, rho + dt * k3);
        rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return rho;
}

}  // namespace lindblock::testing
