// stationary.cpp — Gibbs distributions, block weights, stationary assembly, kernel oracle

#include "lindblock/stationary.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lindblock {

Eigen::VectorXd gibbs_distribution(const Eigen::VectorXd& frequencies, double temperature) {
    if (!(temperature > 0.0))
        throw std::invalid_argument("gibbs_distribution: temperature must be positive");
    if (frequencies.size() == 0)
        throw std::invalid_argument("gibbs_distribution: empty frequency set");
    const double shift = frequencies.minCoeff();
    Eigen::VectorXd p(frequencies.size());
    for (Eigen::Index i = 0; i < frequencies.size(); ++i)
        p(i) = std::exp(-(frequencies(i) - shift) / temperature);
    return p / p.sum();
}

Eigen::VectorXd gibbs_state(const EigenSystem& eig, double temperature) {
    return gibbs_distribution(eig.frequencies, temperature);
}

Eigen::VectorXd block_weights(const SubspacePartition& part, const DensityState& rho0) {
    const auto n = part.dim();
    if (rho0.matrix.rows() != n || rho0.matrix.cols() != n)
        throw std::invalid_argument("block_weights: state dimension mismatch");
    const std::complex<double> trace = rho0.matrix.trace();
    if (std::abs(trace - std::complex<double>(1.0, 0.0)) > 1e-9)
        throw ValidationError("block_weights: initial state trace must be 1");

    Eigen::VectorXd weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(part.blocks.size()));
    for (std::size_t l = 0; l < part.blocks.size(); ++l)
        for (int i : part.blocks[l]) weights(static_cast<Eigen::Index>(l)) += rho0.matrix(i, i).real();
    return weights;
}

StationaryPrediction stationary_state(const EigenSystem& eig, const SubspacePartition& part,
                                      double temperature, const DensityState& rho0) {
    const auto n = eig.dim();
    if (part.dim() != n) throw std::invalid_argument("stationary_state: partition mismatch");

    StationaryPrediction prediction;
    prediction.weights = block_weights(part, rho0);
    prediction.block_gibbs.reserve(part.blocks.size());
    prediction.assembled.matrix = Matrix::Zero(n, n);
    prediction.assembled.time = 0.0;

    for (std::size_t l = 0; l < part.blocks.size(); ++l) {
        const auto& block = part.blocks[l];
        Eigen::VectorXd freqs(static_cast<Eigen::Index>(block.size()));
        for (std::size_t k = 0; k < block.size(); ++k)
            freqs(static_cast<Eigen::Index>(k)) = eig.frequencies(block[k]);
        Eigen::VectorXd gibbs = gibbs_distribution(freqs, temperature);
        for (std::size_t k = 0; k < block.size(); ++k)
            prediction.assembled.matrix(block[k], block[k]) =
                prediction.weights(static_cast<Eigen::Index>(l)) *
                gibbs(static_cast<Eigen::Index>(k));
        prediction.block_gibbs.push_back(std::move(gibbs));
    }
    return prediction;
}

StationaryPrediction stationary_state(const SystemModel& model, const DensityState& rho0) {
    check_density_state(rho0);
    const EigenSystem eig = eigenbasis(model);
    return stationary_state(eig, invariant_partition(eig), model.temperature, rho0);
}

Eigen::VectorXd StationaryPrediction::assembled_populations() const {
    return assembled.matrix.diagonal().real();
}

std::vector<Eigen::VectorXd> null_space_stationary(const RateMatrix& rates,
                                                   const SubspacePartition& part) {
    const auto n = rates.dim();
    if (part.dim() != n)
        throw std::invalid_argument("null_space_stationary: partition dimension mismatch");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (part.block_index[static_cast<std::size_t>(i)] !=
                    part.block_index[static_cast<std::size_t>(j)] &&
                rates.rates(i, j) != 0.0)
                throw std::invalid_argument(
                    "null_space_stationary: rate matrix is not block-consistent with the partition");

    std::vector<Eigen::VectorXd> distributions;
    distributions.reserve(part.blocks.size());
    for (std::size_t l = 0; l < part.blocks.size(); ++l) {
        const auto& block = part.blocks[l];
        const auto m = static_cast<Eigen::Index>(block.size());
        Eigen::MatrixXd generator = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index r = 0; r < m; ++r)
            for (Eigen::Index c = 0; c < m; ++c)
                if (r != c) {
                    generator(r, c) = rates.rates(block[static_cast<std::size_t>(r)],
                                                  block[static_cast<std::size_t>(c)]);
                    generator(c, c) -= generator(r, c);
                }

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(generator, Eigen::ComputeFullV);
        const double threshold = 1e-10 * svd.singularValues()(0);
        Eigen::Index kernel_dim = 0;
        for (Eigen::Index k = 0; k < m; ++k)
            if (svd.singularValues()(k) <= threshold) ++kernel_dim;
        if (kernel_dim != 1) {
            std::ostringstream msg;
            msg << "null_space_stationary: block " << (l + 1) << " has kernel dimension "
                << kernel_dim << " (expected 1; broken detailed balance or disconnected block)";
            throw std::runtime_error(msg.str());
        }

        Eigen::VectorXd kernel = svd.matrixV().col(m - 1);
        const double total = kernel.sum();
        if (std::abs(total) < 1e-12)
            throw std::runtime_error("null_space_stationary: kernel vector has zero total mass");
        distributions.push_back(kernel / total);
    }
    return distributions;
}

}  // namespace lindblock
