// decomposition.cpp — Coupling graph, connected-component partition, block permutation

#include "lindblock/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lindblock {

double default_coupling_threshold(const Matrix& coupling_in_eigenbasis) {
    if (coupling_in_eigenbasis.size() == 0) return 0.0;
    return 1e-12 * coupling_in_eigenbasis.cwiseAbs().maxCoeff();
}

CouplingGraph coupling_graph(const EigenSystem& eig, double epsilon_s) {
    const auto n = eig.dim();
    CouplingGraph graph;
    graph.threshold = epsilon_s;
    graph.adjacency.assign(static_cast<std::size_t>(n), {});
    const Matrix& s = eig.coupling_in_eigenbasis;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (std::abs(s(i, j)) > epsilon_s) {
                graph.adjacency[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
                graph.adjacency[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
            }
    return graph;
}

std::vector<int> SubspacePartition::block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& block : blocks) sizes.push_back(static_cast<int>(block.size()));
    return sizes;
}

SubspacePartition partition_from_blocks(std::vector<std::vector<int>> blocks, Eigen::Index n,
                                        double epsilon_s) {
    for (auto& block : blocks) std::sort(block.begin(), block.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    SubspacePartition part;
    part.epsilon_s = epsilon_s;
    part.block_index.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t l = 0; l < blocks.size(); ++l) {
        for (int i : blocks[l]) {
            if (i < 0 || i >= n || part.block_index[static_cast<std::size_t>(i)] != -1)
                throw std::invalid_argument("partition: blocks must be disjoint subsets of 0..N-1");
            part.block_index[static_cast<std::size_t>(i)] = static_cast<int>(l);
            part.permutation.push_back(i);
        }
    }
    if (static_cast<Eigen::Index>(part.permutation.size()) != n)
        throw std::invalid_argument("partition: blocks must cover all of 0..N-1");
    part.blocks = std::move(blocks);
    return part;
}

SubspacePartition invariant_partition(const EigenSystem& eig, double epsilon_s) {
    if (epsilon_s < 0.0) epsilon_s = default_coupling_threshold(eig.coupling_in_eigenbasis);
    const auto n = eig.dim();
    const CouplingGraph graph = coupling_graph(eig, epsilon_s);

    std::vector<std::vector<int>> blocks;
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (Eigen::Index start = 0; start < n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> block;
        std::deque<int> queue{static_cast<int>(start)};
        visited[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            block.push_back(v);
            for (int w : graph.adjacency[static_cast<std::size_t>(v)])
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = true;
                    queue.push_back(w);
                }
        }
        blocks.push_back(std::move(block));
    }
    return partition_from_blocks(std::move(blocks), n, epsilon_s);
}

Matrix block_permuted_coupling(const EigenSystem& eig, const SubspacePartition& part) {
    const auto n = eig.dim();
    if (part.dim() != n)
        throw std::invalid_argument("block_permuted_coupling: partition dimension mismatch");
    Matrix out(n, n);
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q)
            out(p, q) = eig.coupling_in_eigenbasis(part.permutation[static_cast<std::size_t>(p)],
                                                   part.permutation[static_cast<std::size_t>(q)]);
    return out;
}

double max_off_block_magnitude(const EigenSystem& eig, const SubspacePartition& part) {
    const auto n = eig.dim();
    if (part.dim() != n)
        throw std::invalid_argument("max_off_block_magnitude: partition dimension mismatch");
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (part.block_index[static_cast<std::size_t>(i)] !=
                part.block_index[static_cast<std::size_t>(j)])
                worst = std::max(worst, std::abs(eig.coupling_in_eigenbasis(i, j)));
    return worst;
}

}  // namespace lindblock
